#include "bqf/cubes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include "bqf/composition.hpp"
#include "bqf/reduction.hpp"

namespace bqf {

std::ostream& operator<<(std::ostream& os, const Cube& c) {
    os << '[';
    for (std::size_t i = 0; i < 8; ++i) os << (i ? "," : "") << c.v[i];
    return os << ']';
}

Slicing slice(const Cube& c) {
    const auto& [a, b, cc, d, e, f, g, h] = c.v;
    Slicing s;
    s.U = {a, e, b, f};
    s.D = {cc, g, d, h};
    s.L = {a, cc, e, g};
    s.R = {b, d, f, h};
    s.F = {a, b, cc, d};
    s.B = {e, f, g, h};
    return s;
}

CubeForms cube_forms(const Cube& cube) {
    const auto& [a, b, c, d, e, f, g, h] = cube.v;
    CubeForms out;
    out.ud = Form(b * e - a * f, b * g + d * e - a * h - c * f, d * g - c * h);
    out.lr = Form(c * e - a * g, c * f + d * e - a * h - b * g, d * f - b * h);
    out.fb = Form(b * c - a * d, b * g + c * f - a * h - d * e, f * g - e * h);
    out.discriminant = out.ud.discriminant();
    if (out.lr.discriminant() != out.discriminant || out.fb.discriminant() != out.discriminant)
        throw std::logic_error("cube slices disagree on the discriminant");
    out.degenerate = out.discriminant == 0 || is_square(out.discriminant);
    return out;
}

bool is_primitive(const Cube& c) {
    CubeForms f = cube_forms(c);
    return is_primitive(f.ud) && is_primitive(f.lr) && is_primitive(f.fb);
}

namespace {

int axis_bit(Direction d) {
    switch (d) {
        case Direction::UD: return 2;
        case Direction::LR: return 1;
        case Direction::FB: return 4;
    }
    return 0;
}

// Class used by the triple product: negative definite slices flip to (-a, b, -c).
FormClass slice_class(const Form& f) {
    if (f.discriminant() < 0 && f.a < 0) return class_of(Form(-f.a, f.b, -f.c));
    return class_of(f);
}

}  // namespace

Cube act3(const Matrix& g, Direction dir, const Cube& c) {
    if (g.det() != 1) throw DomainError("act3: matrix must be unimodular");
    int bit = axis_bit(dir);
    Cube out = c;
    for (int i = 0; i < 8; ++i) {
        if (i & bit) continue;
        const Int& m = c.v[i];
        const Int& n = c.v[i | bit];
        out.v[i] = g.p * m + g.q * n;
        out.v[i | bit] = g.r * m + g.s * n;
    }
    return out;
}

Cube act3(const Matrix& g_ud, const Matrix& g_lr, const Matrix& g_fb, const Cube& c) {
    return act3(g_fb, Direction::FB, act3(g_lr, Direction::LR, act3(g_ud, Direction::UD, c)));
}

bool triple_product_check(const Cube& c) {
    CubeForms f = cube_forms(c);
    if (f.degenerate) throw DomainError("cube has zero or square discriminant " + f.discriminant.get_str());
    if (!is_primitive(f.ud) || !is_primitive(f.lr) || !is_primitive(f.fb))
        throw DomainError("cube is not primitive");
    FormClass p = compose(compose(slice_class(f.ud), slice_class(f.lr)), slice_class(f.fb));
    return p == class_of(identity_form(f.discriminant));
}

Cube cube_from_pair(const Form& f1, const Form& f2) {
    ConcordantPair cp = concordant_pair(f1, f2);
    const Int& a1 = cp.g1.a;
    const Int& a2 = cp.g2.a;
    const Int& B = cp.g1.b;
    Int C = cp.g1.c / a2;
    // f_UD = (a1, B, a2 C), f_LR = (a2, B, a1 C), f_FB = (a1 a2, -B, C)
    Cube t(std::array<Int, 8>{Int(0), a1, a2, B, Int(1), Int(0), Int(0), Int(-C)});
    Cube out = act3(cp.w1.inverse().transpose(), Direction::UD, t);
    out = act3(cp.w2.inverse().transpose(), Direction::LR, out);
    CubeForms cf = cube_forms(out);
    if (cf.ud != f1 || cf.lr != f2) throw std::logic_error("cube_from_pair did not reproduce the pair");
    return out;
}

namespace {

using i64 = std::int64_t;

constexpr int kA = 32, kB = 64;

struct ScanState {
    // dense memo (a, b, c) -> (group, index); -2 unknown, -1 skipped
    std::vector<std::int32_t> group, index;
    std::map<i64, int> group_of_disc;
    struct Group {
        Int d;
        std::vector<FormClass> elements;
        std::map<FormClass, int> lookup;
        int identity = -1;
        std::vector<int> table;
        int n = 0;
    };
    std::vector<Group> groups;

    ScanState() : group(std::size_t(2 * kA + 1) * (2 * kB + 1) * (2 * kA + 1), -2),
                  index(group.size(), -1) {}

    static std::size_t slot(i64 a, i64 b, i64 c) {
        return (std::size_t(a + kA) * (2 * kB + 1) + std::size_t(b + kB)) * (2 * kA + 1) + std::size_t(c + kA);
    }

    int group_for(i64 d) {
        auto it = group_of_disc.find(d);
        if (it != group_of_disc.end()) return it->second;
        Group g;
        g.d = Int(static_cast<long>(d));
        // elements only; products are filled lazily
        if (d < 0) {
            i64 nd = -d;
            for (i64 a = 1; 3 * a * a <= nd; ++a)
                for (i64 b = -a + 1; b <= a; ++b) {
                    i64 num = b * b - d;
                    if (num % (4 * a)) continue;
                    i64 c = num / (4 * a);
                    if (c < a || (a == c && b < 0) || std::gcd(std::gcd(a, b), c) != 1) continue;
                    g.elements.push_back({Form(Int(long(a)), Int(long(b)), Int(long(c)))});
                }
        } else {
            for (const Form& f : g_reduced_forms(g.d, true)) {
                FormClass c = class_of(f);
                if (c.representative == f) g.elements.push_back(c);
            }
        }
        std::sort(g.elements.begin(), g.elements.end());
        g.n = static_cast<int>(g.elements.size());
        for (int i = 0; i < g.n; ++i) g.lookup[g.elements[i]] = i;
        g.identity = g.lookup.at(class_of(identity_form(g.d)));
        g.table.assign(std::size_t(g.n) * g.n, -1);
        groups.push_back(std::move(g));
        int id = static_cast<int>(groups.size()) - 1;
        group_of_disc[d] = id;
        return id;
    }

    int mul(int gid, int i, int j) {
        Group& g = groups[gid];
        int& t = g.table[std::size_t(i) * g.n + j];
        if (t < 0) t = g.lookup.at(compose(g.elements[i], g.elements[j]));
        return t;
    }

    // returns false if the form is not usable (non-primitive or degenerate)
    bool lookup(i64 a, i64 b, i64 c, int& gid, int& idx) {
        std::size_t k = slot(a, b, c);
        if (group[k] == -2) {
            i64 d = b * b - 4 * a * c;
            bool square = false;
            if (d > 0) {
                i64 s = static_cast<i64>(std::sqrt(static_cast<double>(d)));
                while (s * s > d) --s;
                while ((s + 1) * (s + 1) <= d) ++s;
                square = s * s == d;
            }
            if (d == 0 || square || std::gcd(std::gcd(a, b), c) != 1) {
                group[k] = -1;
            } else {
                int id = group_for(d);
                Form f{Int(long(a)), Int(long(b)), Int(long(c))};
                group[k] = id;
                index[k] = groups[id].lookup.at(slice_class(f));
            }
        }
        if (group[k] < 0) return false;
        gid = group[k];
        idx = index[k];
        return true;
    }
};

}  // namespace

BoxScanReport scan_triple_product_box(int bound) {
    if (bound < 0 || bound > 4) throw DomainError("scan_triple_product_box: bound must be in [0, 4]");
    ScanState st;
    BoxScanReport rep;
    i64 x[8];
    const i64 lo = -bound, hi = bound;
    for (x[0] = lo; x[0] <= hi; ++x[0])
    for (x[1] = lo; x[1] <= hi; ++x[1])
    for (x[2] = lo; x[2] <= hi; ++x[2])
    for (x[3] = lo; x[3] <= hi; ++x[3])
    for (x[4] = lo; x[4] <= hi; ++x[4])
    for (x[5] = lo; x[5] <= hi; ++x[5])
    for (x[6] = lo; x[6] <= hi; ++x[6])
    for (x[7] = lo; x[7] <= hi; ++x[7]) {
        ++rep.cubes;
        const i64 a = x[0], b = x[1], c = x[2], d = x[3], e = x[4], f = x[5], g = x[6], h = x[7];
        int g1, g2, g3, i1, i2, i3;
        if (!st.lookup(b * e - a * f, b * g + d * e - a * h - c * f, d * g - c * h, g1, i1)) continue;
        if (!st.lookup(c * e - a * g, c * f + d * e - a * h - b * g, d * f - b * h, g2, i2)) continue;
        if (!st.lookup(b * c - a * d, b * g + c * f - a * h - d * e, f * g - e * h, g3, i3)) continue;
        ++rep.checked;
        if (st.mul(g1, st.mul(g1, i1, i2), i3) != st.groups[g1].identity) {
            ++rep.failures;
            if (!rep.first_failure) rep.first_failure = Cube(a, b, c, d, e, f, g, h);
        }
    }
    return rep;
}

}  // namespace bqf
