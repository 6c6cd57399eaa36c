#include "bqf/forms.hpp"

#include <sstream>
#include <vector>

namespace bqf {

Form make_form(const Int& a, const Int& b, const Int& c) {
    Form f(a, b, c);
    Int d = f.discriminant();
    if (d == 0) throw DomainError("form has zero discriminant");
    if (is_square(d)) throw DomainError("form has square discriminant " + d.get_str());
    return f;
}

std::ostream& operator<<(std::ostream& os, const Form& f) {
    return os << '(' << f.a << ',' << f.b << ',' << f.c << ')';
}

std::string to_string(const Form& f) {
    std::ostringstream os;
    os << f;
    return os.str();
}

Int discriminant(const Form& f) { return f.discriminant(); }

Kind classify(const Form& f) {
    Int d = f.discriminant();
    if (d == 0 || is_square(d)) throw DomainError("classify: discriminant must be non-zero and non-square");
    if (d > 0) return Kind::Indefinite;
    return f.a > 0 ? Kind::PositiveDefinite : Kind::NegativeDefinite;
}

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::PositiveDefinite: return "positive-definite";
        case Kind::NegativeDefinite: return "negative-definite";
        case Kind::Indefinite: return "indefinite";
    }
    return "?";
}

Int content(const Form& f) { return gcd(gcd(f.a, f.b), f.c); }

bool is_primitive(const Form& f) { return content(f) == 1; }

Form primitive_part(const Form& f) {
    Int g = content(f);
    if (g == 0) return f;
    return Form(f.a / g, f.b / g, f.c / g);
}

Form negate(const Form& f) { return Form(-f.a, -f.b, -f.c); }

Matrix Matrix::canonical() const {
    bool flip = p != 0 ? p < 0 : q != 0 ? q < 0 : r != 0 ? r < 0 : s < 0;
    return flip ? neg() : *this;
}

Matrix Matrix::inverse() const { return Matrix(s, -q, -r, p); }

Matrix Matrix::transpose() const { return Matrix(p, r, q, s); }

bool Matrix::is_identity() const { return *this == identity(); }

Matrix Matrix::operator*(const Matrix& o) const {
    return Matrix(p * o.p + q * o.r, p * o.q + q * o.s, r * o.p + s * o.r, r * o.q + s * o.s);
}

bool Matrix::operator==(const Matrix& o) const {
    if (p == o.p && q == o.q && r == o.r && s == o.s) return true;
    return p == -o.p && q == -o.q && r == -o.r && s == -o.s;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    return os << "[[" << m.p << ',' << m.q << "],[" << m.r << ',' << m.s << "]]";
}

Matrix identity() { return Matrix(1, 0, 0, 1); }
Matrix gen_L() { return Matrix(1, -1, 1, 0, "L"); }
Matrix gen_S() { return Matrix(0, -1, 1, 0, "S"); }
Matrix translation(const Int& k) { return Matrix(1, k, 0, 1); }
Matrix lower(const Int& k) { return Matrix(1, 0, k, 1); }

Matrix unimodular(const Int& p, const Int& q, const Int& r, const Int& s) {
    Matrix m(p, q, r, s);
    if (m.det() != 1) throw DomainError("matrix determinant is " + m.det().get_str() + ", expected 1");
    return m;
}

Form act(const Matrix& g, const Form& f) {
    const Int& a = f.a;
    const Int& b = f.b;
    const Int& c = f.c;
    return Form(f(g.p, g.r), 2 * a * g.p * g.q + b * (g.p * g.s + g.q * g.r) + 2 * c * g.r * g.s, f(g.q, g.s));
}

Matrix matrix_of_word(const std::string& word) {
    Matrix m = identity();
    static const Matrix L(1, -1, 1, 0), S(0, -1, 1, 0);
    for (char ch : word) {
        if (ch == 'L')
            m = m * L;
        else if (ch == 'S')
            m = m * S;
        else
            throw DomainError(std::string("word letter must be L or S, got '") + ch + "'");
    }
    m.word = reduce_word(word);
    return m;
}

std::string reduce_word(const std::string& word) {
    std::string out;
    for (char ch : word) {
        out.push_back(ch);
        if (ch == 'S' && out.size() >= 2 && out[out.size() - 2] == 'S') {
            out.resize(out.size() - 2);
        } else if (ch == 'L' && out.size() >= 3 && out.compare(out.size() - 3, 3, "LLL") == 0) {
            out.resize(out.size() - 3);
        }
    }
    return out;
}

std::string word_of(const Matrix& m0) {
    // Euclid: m = T^k1 S T^k2 S ... T^kn, then T -> LS and T^-1 -> SLL.
    Int p = m0.p, q = m0.q, r = m0.r, s = m0.s;
    std::string raw;
    auto emit_t = [&raw](const Int& k) {
        if (k > 0)
            for (Int i = 0; i < k; ++i) raw += "LS";
        else
            for (Int i = 0; i < -k; ++i) raw += "SLL";
    };
    while (r != 0) {
        Int k = floor_div(p, r);
        emit_t(k);
        raw += "S";
        Int np = p - k * r, nq = q - k * s;
        p = r;
        q = s;
        r = -np;
        s = -nq;
    }
    emit_t(q * p);
    return reduce_word(raw);
}

Matrix with_word(Matrix m) {
    m.word = word_of(m);
    return m;
}

namespace {

std::string superscript(unsigned long n) {
    static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s = std::to_string(n), out;
    for (char ch : s) out += digits[ch - '0'];
    return out;
}

}  // namespace

std::string format_blocks(const std::string& word) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < word.size()) {
        std::size_t j = i;
        while (j < word.size() && word[j] == 'L') ++j;
        std::size_t ls = j - i;
        bool has_s = j < word.size() && word[j] == 'S';
        std::string tok;
        if (ls == 0)
            tok = "S";
        else if (has_s)
            tok = ls == 1 ? "(LS)" : "(L" + superscript(ls) + "S)";
        else
            tok = ls == 1 ? "L" : "L" + superscript(ls);
        tokens.push_back(tok);
        i = j + (has_s ? 1 : 0);
    }
    std::string out;
    for (std::size_t k = 0; k < tokens.size();) {
        std::size_t n = 1;
        while (k + n < tokens.size() && tokens[k + n] == tokens[k]) ++n;
        out += tokens[k];
        if (n > 1) out += superscript(n);
        k += n;
    }
    return out;
}

bool is_reduced_definite(const Form& f) {
    if (f.discriminant() >= 0 || f.a <= 0) throw DomainError("definite reduction predicate needs a positive definite form");
    if (!(abs(f.b) <= f.a && f.a <= f.c)) return false;
    if ((abs(f.b) == f.a || f.a == f.c) && f.b < 0) return false;
    return true;
}

namespace {
void require_indefinite(const Form& f, const char* what) {
    if (f.discriminant() <= 0) throw DomainError(std::string(what) + " predicate needs an indefinite form");
}
}  // namespace

bool is_g_reduced(const Form& f) {
    require_indefinite(f, "G-reduced");
    Int d = f.discriminant();
    Int a2 = 2 * abs(f.a);
    return f.b > 0 && lt_sqrt(f.b, d) && lt_sqrt(a2 - f.b, d) && gt_sqrt(a2 + f.b, d);
}

bool is_z_reduced(const Form& f) {
    require_indefinite(f, "Z-reduced");
    return f.a > 0 && f.c > 0 && f.b > f.a + f.c;
}

bool is_semi_reduced(const Form& f) {
    require_indefinite(f, "semi-reduced");
    return sgn(f.a) * sgn(f.c) < 0;
}

ReductionStatus reduction_status(const Form& f) {
    ReductionStatus st;
    Int d = f.discriminant();
    if (d < 0) {
        if (f.a > 0) st.reduced_definite = is_reduced_definite(f);
    } else if (d > 0) {
        st.g_reduced = is_g_reduced(f);
        st.z_reduced = is_z_reduced(f);
        st.semi_reduced = is_semi_reduced(f);
    }
    return st;
}

}  // namespace bqf
