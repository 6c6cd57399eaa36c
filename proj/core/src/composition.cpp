#include "bqf/composition.hpp"

#include <algorithm>
#include <random>

#include "bqf/reduction.hpp"

namespace bqf {

Int squarefree_part(const Int& n) {
    if (n == 0) return 0;
    Int out = sgn(n) < 0 ? -1 : 1;
    for (auto& [p, e] : factor(n))
        if (e % 2) out *= p;
    return out;
}

bool is_unitable(const Form& f1, const Form& f2) {
    Int prod = f1.discriminant() * f2.discriminant();
    return prod > 0 && is_square(prod);
}

bool is_concordant(const Form& f1, const Form& f2) {
    if (f1.discriminant() != f2.discriminant()) throw DomainError("is_concordant: discriminants differ");
    if (f1.b != f2.b || f1.a == 0 || f2.a == 0) return false;
    return mpz_divisible_p(f1.c.get_mpz_t(), f2.a.get_mpz_t()) && mpz_divisible_p(f2.c.get_mpz_t(), f1.a.get_mpz_t());
}

namespace {

void check_pair(const Form& f1, const Form& f2) {
    Int d = f1.discriminant();
    if (d != f2.discriminant()) throw DomainError("forms have different discriminants");
    if (d == 0 || is_square(d)) throw DomainError("discriminant must be non-zero and non-square");
    if (!is_primitive(f1) || !is_primitive(f2)) throw DomainError("forms must be primitive");
}

// A unimodular matrix whose first column (x, y) makes f(x, y) coprime to m.
Matrix coprime_mover(const Form& f, const Int& m) {
    for (long r = 1; r <= 2000; ++r) {
        for (long x = -r; x <= r; ++x) {
            for (long y : {r - std::labs(x), -(r - std::labs(x))}) {
                if (gcd(Int(x), Int(y)) != 1) continue;
                Int v = f(x, y);
                if (v != 0 && gcd(v, m) == 1) {
                    Egcd e = egcd(Int(x), Int(y));
                    return Matrix(x, -e.y, y, e.x);
                }
                if (y == 0) break;
            }
        }
    }
    throw NotFound("no value of the form coprime to " + m.get_str() + " found");
}

}  // namespace

ConcordantPair concordant_pair(const Form& f1, const Form& f2) {
    check_pair(f1, f2);
    ConcordantPair out;
    Form h2 = f2;
    Matrix m2 = identity();
    if (gcd(f1.a, f2.a) != 1) {
        m2 = coprime_mover(f2, f1.a);
        h2 = act(m2, f2);
    }
    const Int& a1 = f1.a;
    const Int& a2 = h2.a;
    Int d = f1.discriminant();
    Int m = abs(a2);
    Int k = mod(((h2.b - f1.b) / 2) * inv_mod(mod(a1, m), m), m);
    Int B = f1.b + 2 * a1 * k;
    Int n = 2 * abs(a1 * a2);
    B = mod(B, n);
    if (B > n / 2) B -= n;
    Int t1 = (B - f1.b) / (2 * a1);
    Int t2 = (B - h2.b) / (2 * a2);
    out.w1 = translation(t1);
    out.w2 = m2 * translation(t2);
    out.g1 = act(out.w1, f1);
    out.g2 = act(out.w2, f2);
    if (!is_concordant(out.g1, out.g2)) throw std::logic_error("concordant_pair produced a non-concordant pair");
    (void)d;
    return out;
}

ConcordantPair concordant_pair(const FormClass& c1, const FormClass& c2) {
    return concordant_pair(c1.representative, c2.representative);
}

Form dirichlet_product(const Form& g1, const Form& g2) {
    if (!is_concordant(g1, g2)) throw DomainError("dirichlet_product needs a concordant pair");
    return Form(g1.a * g2.a, g1.b, g1.c / g2.a);
}

Form compose_forms(const Form& f1, const Form& f2) {
    ConcordantPair cp = concordant_pair(f1, f2);
    return dirichlet_product(cp.g1, cp.g2);
}

FormClass compose(const FormClass& c1, const FormClass& c2) {
    return class_of(compose_forms(c1.representative, c2.representative));
}

Form identity_form(const Int& d) {
    if (d == 0 || is_square(d)) throw DomainError("identity_form: discriminant must be non-zero and non-square");
    Int r = mod(d, 4);
    if (r == 0) return Form(1, 0, -d / 4);
    if (r == 1) return Form(1, 1, -(d - 1) / 4);
    throw DomainError("identity_form: discriminant must be 0 or 1 mod 4");
}

FormClass inverse(const FormClass& c) {
    const Form& f = c.representative;
    return class_of(Form(f.a, -f.b, f.c));
}

bool is_ambiguous(const Form& f) {
    if (!is_primitive(f)) throw DomainError("is_ambiguous needs a primitive form");
    return equivalent(f, Form(f.a, -f.b, f.c)).has_value();
}

int ClassGroup::index_of(const FormClass& c) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), c);
    if (it == elements.end() || *it != c) return -1;
    return static_cast<int>(it - elements.begin());
}

int ClassGroup::index_of_form(const Form& f) const { return index_of(class_of(f)); }

int ClassGroup::element_order(int i) const {
    int x = i, n = 1;
    while (x != identity) {
        x = table[x][i];
        ++n;
    }
    return n;
}

ClassGroup class_group(const Int& d) {
    Int r = mod(d, 4);
    if (d == 0 || is_square(d) || (r != 0 && r != 1))
        throw DomainError("class_group: discriminant must be non-square and 0 or 1 mod 4");
    ClassGroup g;
    g.discriminant = d;
    if (d < 0) {
        Int nd = -d;
        for (Int a = 1; 3 * a * a <= nd; ++a) {
            for (Int b = -a + 1; b <= a; ++b) {
                Int num = b * b - d;
                if (mod(num, 4 * a) != 0) continue;
                Form f(a, b, num / (4 * a));
                if (f.c < a || (f.a == f.c && f.b < 0) || !is_primitive(f)) continue;
                g.elements.push_back({f});
            }
        }
    } else {
        for (const Form& f : g_reduced_forms(d, true)) {
            FormClass c = class_of(f);
            if (c.representative == f) g.elements.push_back(c);
        }
    }
    std::sort(g.elements.begin(), g.elements.end());
    std::size_t n = g.elements.size();
    g.identity = g.index_of(class_of(identity_form(d)));
    g.table.assign(n, std::vector<int>(n, -1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g.table[i][j] = g.index_of(compose(g.elements[i], g.elements[j]));
    g.inverse.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i) g.inverse[i] = g.index_of(inverse(g.elements[i]));
    return g;
}

AxiomReport verify_axioms(const ClassGroup& g, std::size_t full_limit, std::size_t random_triples, unsigned seed) {
    AxiomReport rep;
    int n = static_cast<int>(g.order());
    if (g.identity < 0) {
        rep.identity = false;
        return rep;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (g.table[i][j] < 0) rep.closure = false;
            if (g.table[i][j] != g.table[j][i]) rep.commutative = false;
        }
    }
    if (!rep.closure) return rep;
    for (int i = 0; i < n; ++i) {
        if (g.table[g.identity][i] != i || g.table[i][g.identity] != i) rep.identity = false;
        int inv = g.inverse[i];
        if (inv < 0 || g.table[i][inv] != g.identity) rep.inverses = false;
    }
    auto assoc = [&](int i, int j, int k) { return g.table[g.table[i][j]][k] == g.table[i][g.table[j][k]]; };
    if (g.order() <= full_limit) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    ++rep.triples_checked;
                    if (!assoc(i, j, k)) rep.associative = false;
                }
    } else {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (std::size_t t = 0; t < random_triples; ++t) {
            ++rep.triples_checked;
            if (!assoc(pick(rng), pick(rng), pick(rng))) rep.associative = false;
        }
    }
    return rep;
}

bool is_fundamental_discriminant(const Int& d) {
    if (d == 0 || d == 1) return false;
    Int r = mod(d, 4);
    if (r == 1) return squarefree_part(d) == d;
    if (r != 0) return false;
    Int m = d / 4;
    Int rm = mod(m, 4);
    return (rm == 2 || rm == 3) && squarefree_part(m) == m;
}

bool brahmagupta_holds(const Int& X, const Int& Y, const Int& Xp, const Int& Yp, const Int& N, int s) {
    Int lhs = (X * X + N * Y * Y) * (Xp * Xp + N * Yp * Yp);
    Int u = X * Xp - s * N * Y * Yp;
    Int v = X * Yp + s * Xp * Y;
    return lhs == u * u + N * v * v;
}

bool lagrange_holds(const Int& x, const Int& y, const Int& xp, const Int& yp) {
    Int lhs = (2 * x * x + 2 * x * y + 3 * y * y) * (2 * xp * xp + 2 * xp * yp + 3 * yp * yp);
    Int X = 2 * x * xp + x * yp + y * xp + 3 * y * yp;
    Int Y = x * yp - y * xp;
    return lhs == X * X + 5 * Y * Y;
}

}  // namespace bqf
