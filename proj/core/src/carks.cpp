#include "bqf/carks.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "bqf/reduction.hpp"

namespace bqf {

BunchCode BunchCode::canonical(std::vector<Int> runs) {
    if (runs.size() < 2 || runs.size() % 2) throw DomainError("bunch code must have even length >= 2");
    for (const Int& r : runs)
        if (r < 1) throw DomainError("bunch code entries must be positive");
    std::size_t n = runs.size(), best = 0;
    for (std::size_t k = 2; k < n; k += 2) {
        for (std::size_t i = 0; i < n; ++i) {
            const Int& x = runs[(k + i) % n];
            const Int& y = runs[(best + i) % n];
            if (x != y) {
                if (x < y) best = k;
                break;
            }
        }
    }
    BunchCode c;
    c.runs = rotate_left(runs, best);
    return c;
}

Int BunchCode::total() const {
    Int s = 0;
    for (const Int& r : runs) s += r;
    return s;
}

std::string to_string(const BunchCode& c) {
    std::string out = "(";
    for (std::size_t i = 0; i < c.runs.size(); ++i) out += (i ? "," : "") + c.runs[i].get_str();
    return out + ")";
}

BunchCode inverse_code(const BunchCode& c) {
    std::vector<Int> r(c.runs.rbegin(), c.runs.rend());
    return BunchCode::canonical(rotate_left(r, 1));
}

bool is_symmetric(const BunchCode& c) { return inverse_code(c) == BunchCode::canonical(c.runs); }

namespace {

const Matrix kB(1, 0, 1, 1);
const Matrix kT(1, 1, 0, 1);

void require_indefinite_primitive(const Form& f) {
    Int d = f.discriminant();
    if (d <= 0 || is_square(d)) throw DomainError("form must be indefinite with non-square discriminant");
    if (!is_primitive(f)) throw DomainError("form must be primitive");
}

struct Walk {
    std::string moves;
    std::vector<Form> edges;
    Matrix w;
};

// Conway's river from an edge with A > 0 > C, one full period.
Walk river_walk(const Form& g0) {
    Walk out;
    Form g = g0;
    do {
        out.edges.push_back(g);
        const Int &A = g.a, &B = g.b, &C = g.c;
        Int s = A + B + C;
        if (s > 0) {
            g = Form(s, B + 2 * C, C);
            out.moves += 'B';
            out.w = out.w * kB;
        } else {
            g = Form(A, 2 * A + B, s);
            out.moves += 'T';
            out.w = out.w * kT;
        }
    } while (g != g0);
    return out;
}

// Semi-reduced start with a > 0 > c, and gamma with act(gamma, f) == start.
std::pair<Form, Matrix> river_entry(const Form& f) {
    if (f.a > 0 && f.c < 0) return {f, identity()};
    if (f.a < 0 && f.c > 0) return {act(gen_S(), f), gen_S()};
    GaussCycle gc = gauss_reduce_indefinite(f);
    Form x = gc.cycle[0];
    if (x.a > 0) return {x, gc.witness};
    return {act(gen_S(), x), gc.witness * gen_S()};
}

Matrix positive_trace(Matrix m) {
    if (m.trace() < 0) m = m.neg();
    return m;
}

std::vector<Int> runs_of(const std::string& moves) {
    // start at the beginning of an inner run
    std::size_t n = moves.size(), s = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (moves[i] == 'B' && moves[(i + n - 1) % n] == 'T') {
            s = i;
            break;
        }
    std::vector<Int> runs;
    char prev = 0;
    for (std::size_t k = 0; k < n; ++k) {
        char ch = moves[(s + k) % n];
        if (ch == prev)
            runs.back() += 1;
        else
            runs.push_back(1);
        prev = ch;
    }
    return runs;
}

}  // namespace

Matrix aut_generator(const Form& f) {
    require_indefinite_primitive(f);
    auto [g0, gamma] = river_entry(f);
    Walk w = river_walk(g0);
    return with_word(positive_trace(gamma * w.w * gamma.inverse()));
}

Cark cark_of(const Form& f) {
    require_indefinite_primitive(f);
    std::vector<Form> cyc = gauss_reduce_indefinite(f).cycle;
    Form least = *std::min_element(cyc.begin(), cyc.end());
    Form g0 = least.a > 0 ? least : act(gen_S(), least);
    auto m = equivalent(f, g0);
    if (!m) throw std::logic_error("cark_of: G-reduced form not equivalent to input");

    Cark c;
    c.form = f;
    c.to_river = *m;
    Walk w = river_walk(g0);
    c.moves = w.moves;
    c.river = w.edges;
    c.code = BunchCode::canonical(runs_of(w.moves));
    for (const Form& g : w.edges) {
        c.spine.push_back(act(gen_S(), g));
        c.spine.push_back(g);
    }
    c.base = static_cast<std::size_t>(std::find(c.spine.begin(), c.spine.end(), least) - c.spine.begin());
    c.automorph = with_word(positive_trace(c.to_river * w.w * c.to_river.inverse()));
    return c;
}

bool is_ambiguous_symmetric(const Form& f) { return is_symmetric(cark_of(f).code); }

namespace {

using Vec = std::pair<Int, Int>;

Vec mul_vec(const Matrix& m, const Vec& v) { return {m.p * v.first + m.q * v.second, m.r * v.first + m.s * v.second}; }

Int norm(const Vec& v) { return v.first * v.first + v.second * v.second; }

bool key_less(const Vec& x, const Vec& y) {
    Int nx = norm(x), ny = norm(y);
    if (nx != ny) return nx < ny;
    return x < y;
}

Vec sign_normal(Vec v) {
    if (v.first < 0 || (v.first == 0 && v.second < 0)) return {-v.first, -v.second};
    return v;
}

// Finite automorphism group of a definite form, including -I.
std::vector<Matrix> definite_automorphs(const Form& f) {
    Int d = f.discriminant();
    std::vector<Matrix> out;
    // W(t, u) = [[(t - bu)/2, -cu], [au, (t + bu)/2]], t^2 - d u^2 = 4
    for (long u = -1; u <= 1; ++u) {
        Int t2 = 4 + d * u * u;
        if (t2 < 0 || !is_square(t2)) continue;
        Int t = isqrt(t2);
        for (Int tt : {t, Int(-t)}) {
            Int num1 = tt - f.b * u, num2 = tt + f.b * u;
            if (mod(num1, 2) != 0) continue;
            out.emplace_back(num1 / 2, -f.c * u, f.a * u, num2 / 2);
            if (t == 0) break;
        }
    }
    return out;
}

Vec definite_orbit_rep(const Form& f, const Vec& v) {
    Vec best = sign_normal(v);
    for (const Matrix& m : definite_automorphs(f)) {
        Vec w = mul_vec(m, v);
        if (w == sign_normal(w) && key_less(w, best)) best = w;
    }
    return best;
}

Vec indefinite_orbit_rep(const Matrix& W, const Vec& v0) {
    Matrix Wi = W.inverse();
    Vec v = v0;
    for (;;) {
        Vec a = mul_vec(W, v), b = mul_vec(Wi, v);
        if (norm(a) < norm(v))
            v = a;
        else if (norm(b) < norm(v))
            v = b;
        else
            break;
    }
    // ties between neighbours
    Vec best = sign_normal(v);
    for (const Vec& w : {mul_vec(W, v), mul_vec(Wi, v)})
        if (norm(w) == norm(v) && key_less(sign_normal(w), best)) best = sign_normal(w);
    return best;
}

Representation represent_definite(const Form& f0, const Int& N0, Budget* budget) {
    Form f = f0;
    Int N = N0;
    if (f.a < 0) {
        f = negate(f);
        N = -N;
    }
    Representation rep;
    if (N < 0) return rep;
    Int nd = -f.discriminant();
    // 4aN = (2aX + bY)^2 + |d| Y^2
    Int ymax = isqrt(4 * f.a * N / nd);
    std::set<Vec> seen;
    for (Int y = -ymax; y <= ymax; ++y) {
        charge(budget);
        // a X^2 + b y X + (c y^2 - N) = 0
        Int disc = f.b * f.b * y * y - 4 * f.a * (f.c * y * y - N);
        if (disc < 0 || !is_square(disc)) continue;
        Int r = isqrt(disc);
        for (Int num : {Int(-f.b * y + r), Int(-f.b * y - r)}) {
            if (mod(num, 2 * f.a) != 0) continue;
            Vec v{num / (2 * f.a), y};
            ++rep.faces_visited;
            if (gcd(v.first, v.second) != 1) continue;
            seen.insert(definite_orbit_rep(f0, v));
        }
    }
    rep.solutions.assign(seen.begin(), seen.end());
    std::sort(rep.solutions.begin(), rep.solutions.end(), key_less);
    return rep;
}

}  // namespace

std::pair<Int, Int> orbit_representative(const Form& f, const std::pair<Int, Int>& v) {
    Int d = f.discriminant();
    if (d == 0 || is_square(d)) throw DomainError("orbit_representative: discriminant must be non-zero and non-square");
    if (d < 0) return definite_orbit_rep(f, v);
    return indefinite_orbit_rep(aut_generator(f), v);
}

Representation represent(const Form& f, const Int& N, Budget* budget) {
    if (N == 0) throw DomainError("represent: N must be non-zero");
    Int d = f.discriminant();
    if (d == 0 || is_square(d)) throw DomainError("represent: discriminant must be non-zero and non-square");
    if (!is_primitive(f)) throw DomainError("represent: form must be primitive");
    if (d < 0) return represent_definite(f, N, budget);

    auto [g0, gamma] = river_entry(f);
    Walk w = river_walk(g0);
    Matrix W = positive_trace(gamma * w.w * gamma.inverse());
    Representation rep;
    std::set<Vec> found;
    Int aN = abs(N);
    auto hit = [&](const Vec& z) { found.insert(indefinite_orbit_rep(W, mul_vec(gamma, z))); };

    struct Edge {
        Vec x, y;
        Int fx, h, fy;
    };
    Vec u{1, 0}, v{0, 1};
    Form g = g0;
    for (char mv : w.moves) {
        Vec z{u.first + v.first, u.second + v.second};
        Int fz = g.a + g.b + g.c;
        charge(budget);
        ++rep.faces_visited;
        if (fz == N) hit(z);
        Edge trib;
        if (mv == 'B') {
            trib = {u, z, g.a, 2 * g.a + g.b, fz};
            g = Form(fz, g.b + 2 * g.c, g.c);
            u = z;
        } else {
            trib = {z, v, fz, g.b + 2 * g.c, g.c};
            g = Form(g.a, 2 * g.a + g.b, fz);
            v = z;
        }
        if (sgn(trib.fx) != sgn(N)) continue;
        std::vector<Edge> stack{trib};
        while (!stack.empty()) {
            Edge e = stack.back();
            stack.pop_back();
            Vec z2{e.x.first + e.y.first, e.x.second + e.y.second};
            Int f2 = e.fx + e.fy + e.h;
            charge(budget);
            ++rep.faces_visited;
            if (abs(f2) <= abs(e.fx) || abs(f2) <= abs(e.fy)) rep.monotone = false;
            if (abs(f2) > aN) continue;
            if (f2 == N) hit(z2);
            stack.push_back({e.x, z2, e.fx, 2 * e.fx + e.h, f2});
            stack.push_back({z2, e.y, f2, e.h + 2 * e.fy, e.fy});
        }
    }
    for (const Vec& s : found)
        if (f(s.first, s.second) != N) throw std::logic_error("represent: solution failed verification");
    rep.solutions.assign(found.begin(), found.end());
    std::sort(rep.solutions.begin(), rep.solutions.end(), key_less);
    return rep;
}

namespace {

std::string quote(const Form& f) { return "\"" + to_string(f) + "\""; }

struct DotWriter {
    std::ostringstream os;
    int stubs = 0;

    void black(const std::string& id) { os << "  " << id << " [shape=circle, style=filled, fillcolor=black, label=\"\", width=0.15];\n"; }
    void white(const std::string& id) { os << "  " << id << " [shape=circle, label=\"\", width=0.15];\n"; }
    std::string stub() {
        std::string id = "x" + std::to_string(stubs++);
        os << "  " << id << " [shape=point, width=0.05];\n";
        return id;
    }
    void edge(const std::string& a, const std::string& b, const Form& label, const std::string& extra = "") {
        os << "  " << a << " -- " << b << " [label=" << quote(label) << extra << "];\n";
    }

    // Non-river edge (f(x), h, f(y)) hanging from the black vertex `from`.
    void branch(const std::string& from, const std::string& id, const Form& e, int depth) {
        if (depth <= 0) {
            edge(from, stub(), e);
            return;
        }
        std::string mid = "o" + id, end = "b" + id;
        white(mid);
        black(end);
        edge(from, mid, e);
        edge(mid, end, act(gen_S(), e));
        Int fz = e.a + e.c + e.b;
        branch(end, id + "l", Form(e.a, 2 * e.a + e.b, fz), depth - 1);
        branch(end, id + "r", Form(fz, e.b + 2 * e.c, e.c), depth - 1);
    }
};

}  // namespace

std::string export_dot(const Cark& c, int depth) {
    if (depth < 0) throw DomainError("export_dot: depth must be >= 0");
    DotWriter w;
    std::size_t L = c.river.size();
    std::size_t base_edge = c.base / 2;
    w.os << "graph cark {\n  // " << to_string(c.form) << " code " << to_string(c.code) << "\n";
    w.os << "  node [fontsize=8]; edge [fontsize=7];\n";
    for (std::size_t i = 0; i < L; ++i) {
        w.black("p" + std::to_string(i));
        w.white("s" + std::to_string(i));
    }
    for (std::size_t i = 0; i < L; ++i) {
        std::string s = "s" + std::to_string(i);
        std::string prev = "p" + std::to_string((i + L - 1) % L), next = "p" + std::to_string(i);
        std::string hl = i == base_edge ? ", color=red, penwidth=3" : "";
        w.edge(prev, s, c.spine[2 * i], hl);
        w.edge(s, next, c.spine[2 * i + 1], hl);
    }
    // tributary leaving the vertex at the end of river edge i
    for (std::size_t i = 0; i < L; ++i) {
        const Form& g = c.river[i];
        Int fz = g.a + g.b + g.c;
        bool inner = c.moves[i] == 'B';
        Form e = inner ? Form(g.a, 2 * g.a + g.b, fz) : Form(fz, g.b + 2 * g.c, g.c);
        w.os << "  subgraph cluster_t" << i << " { class=\"" << (inner ? "inner" : "outer") << "\"; style=invis;\n";
        w.branch("p" + std::to_string(i), "t" + std::to_string(i), e, depth);
        w.os << "  }\n";
    }
    w.os << "}\n";
    return w.os.str();
}

}  // namespace bqf
