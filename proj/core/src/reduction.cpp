#include "bqf/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace bqf {

Reduced reduce_definite(const Form& f0) {
    if (f0.discriminant() >= 0 || f0.a <= 0) throw DomainError("reduce_definite needs a positive definite form");
    Form f = f0;
    Matrix w = identity();
    for (;;) {
        Int k = floor_div(f.a - f.b, 2 * f.a);
        if (k != 0) {
            f = act(translation(k), f);
            w = w * translation(k);
        }
        if (f.a > f.c) {
            f = act(gen_S(), f);
            w = w * gen_S();
            continue;
        }
        break;
    }
    if (f.a == f.c && f.b < 0) {
        f = act(gen_S(), f);
        w = w * gen_S();
    }
    return {f, w};
}

Reduced rho(const Form& f) {
    Int d = f.discriminant();
    if (d <= 0) throw DomainError("rho needs an indefinite form");
    Int s = isqrt(d);
    Int C = abs(f.c);
    Int r = mod(-f.b, 2 * C);
    if (s < C) {
        if (r > C) r -= 2 * C;
    } else {
        r += floor_div(s - r, 2 * C) * 2 * C;
    }
    Int t = (r + f.b) / (2 * f.c);
    Matrix g(0, -1, 1, t);
    return {act(g, f), g};
}

GaussCycle gauss_reduce_indefinite(const Form& f) {
    if (f.discriminant() <= 0) throw DomainError("gauss_reduce_indefinite needs an indefinite form");
    if (is_square(f.discriminant())) throw DomainError("square discriminant");
    GaussCycle out;
    Form x = f;
    Matrix w = identity();
    while (!is_g_reduced(x)) {
        Reduced st = rho(x);
        x = st.form;
        w = w * st.witness;
    }
    out.witness = w;
    Form start = x;
    do {
        out.cycle.push_back(x);
        x = rho(x).form;
    } while (x != start);
    return out;
}

Form zagier_step(const Form& f, Int* n_out) {
    if (f.a <= 0) throw DomainError("Zagier step needs a > 0");
    Int d = f.discriminant();
    // n = ceil((b + sqrt d) / 2a) = floor((b + isqrt d) / 2a) + 1 since sqrt d is irrational
    Int n = floor_div(f.b + isqrt(d), 2 * f.a) + 1;
    if (n_out) *n_out = n;
    return Form(f.a * n * n - f.b * n + f.c, 2 * f.a * n - f.b, f.a);
}

ZagierResult zagier_reduce(const Form& f) {
    Int d = f.discriminant();
    if (d <= 0 || is_square(d)) throw DomainError("zagier_reduce needs an indefinite form with non-square discriminant");
    Form x = f;
    if (x.a < 0) {
        if (x.c < 0) x = gauss_reduce_indefinite(x).cycle[0];
        if (x.a < 0) x = act(gen_S(), x);
    }
    ZagierResult out;
    out.entry = x;
    std::map<Form, std::size_t> seen;
    std::vector<Form> path;
    std::vector<Int> steps;
    while (!seen.count(x)) {
        seen[x] = path.size();
        path.push_back(x);
        Int n;
        x = zagier_step(x, &n);
        steps.push_back(n);
    }
    std::size_t k = seen[x];
    out.preperiod.assign(path.begin(), path.begin() + k);
    out.cycle.assign(path.begin() + k, path.end());
    out.steps = steps;
    return out;
}

namespace {

// Machine-integer mirror of zagier_reduce for the box scan.
struct F64 {
    std::int64_t a, b, c;
    bool operator==(const F64& o) const { return a == o.a && b == o.b && c == o.c; }
};

std::int64_t fdiv64(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t isqrt64(std::int64_t d) {
    auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(d)));
    while (s * s > d) --s;
    while ((s + 1) * (s + 1) <= d) ++s;
    return s;
}

constexpr std::int64_t kSafe = std::int64_t(1) << 30;

bool safe(const F64& f) { return std::abs(f.a) < kSafe && std::abs(f.b) < kSafe && std::abs(f.c) < kSafe; }

// sqrt d is irrational, so x < sqrt d iff x <= s
bool g_reduced64(const F64& f, std::int64_t s) {
    std::int64_t a2 = 2 * std::abs(f.a);
    return f.b > 0 && f.b <= s && a2 - f.b <= s && a2 + f.b > s;
}

F64 rho64(const F64& f, std::int64_t s) {
    std::int64_t C = std::abs(f.c), r = -f.b % (2 * C);
    if (r < 0) r += 2 * C;
    if (s < C) {
        if (r > C) r -= 2 * C;
    } else {
        r += fdiv64(s - r, 2 * C) * 2 * C;
    }
    std::int64_t t = (r + f.b) / (2 * f.c);
    return {f.c, -f.b + 2 * f.c * t, f.a - f.b * t + f.c * t * t};
}

enum class ScanOutcome { Ok, CfMismatch, NotReduced, Overflow };

// Z-reduced forms on cycles already verified, coefficients packed 21 bits each
// (Z-reduced coefficients are positive and at most (d + 1) / 2).
// Open addressing keeps the scan free of per-insert allocation; 0 marks empty.
class Known {
public:
    Known() : slots_(1 << 20, 0) {}
    bool count(std::uint64_t k) const {
        for (std::size_t i = slot(k);; i = (i + 1) & (slots_.size() - 1)) {
            if (slots_[i] == k) return true;
            if (slots_[i] == 0) return false;
        }
    }
    template <class It>
    void insert(It first, It last) {
        for (; first != last; ++first) add(*first);
    }

private:
    std::vector<std::uint64_t> slots_;
    std::size_t used_ = 0;
    std::size_t slot(std::uint64_t k) const { return (k * 0x9E3779B97F4A7C15ull >> 20) & (slots_.size() - 1); }
    void add(std::uint64_t k) {
        if (2 * (used_ + 1) > slots_.size()) {
            std::vector<std::uint64_t> old(slots_.size() * 2, 0);
            old.swap(slots_);
            used_ = 0;
            for (std::uint64_t x : old)
                if (x) add(x);
        }
        std::size_t i = slot(k);
        while (slots_[i] != 0) {
            if (slots_[i] == k) return;
            i = (i + 1) & (slots_.size() - 1);
        }
        slots_[i] = k;
        ++used_;
    }
};

std::uint64_t pack(const F64& f) { return (std::uint64_t(f.a) << 42) | (std::uint64_t(f.b) << 21) | std::uint64_t(f.c); }

ScanOutcome zagier64(F64 x, std::int64_t d, Known& known) {
    std::int64_t s = isqrt64(d);
    constexpr int kCap = 1 << 16;
    if (x.a < 0) {
        if (x.c < 0) {
            int k = 0;
            while (!g_reduced64(x, s)) {
                x = rho64(x, s);
                if (!safe(x) || ++k > kCap) return ScanOutcome::Overflow;
            }
        }
        if (x.a < 0) x = {x.c, -x.b, x.a};
    }
    // minus expansion of (P + sqrt d) / Q run alongside the steps
    std::int64_t P = x.b, Q = 2 * x.a;
    int steps = 0;
    bool cf_ok = true;
    auto step = [&]() {
        std::int64_t n = fdiv64(x.b + s, 2 * x.a) + 1;
        std::int64_t t = fdiv64(P + s + (Q < 0 ? 1 : 0), Q) + 1;
        if (t != n) cf_ok = false;
        P = t * Q - P;
        Q = (P * P - d) / Q;
        x = {x.a * n * n - x.b * n + x.c, 2 * x.a * n - x.b, x.a};
        ++steps;
    };
    auto z = [](const F64& f) { return f.a > 0 && f.c > 0 && f.b > f.a + f.c; };
    while (!z(x)) {
        step();
        if (!safe(x) || std::abs(P) >= kSafe || std::abs(Q) >= kSafe) return ScanOutcome::Overflow;
        if (steps > kCap) return ScanOutcome::NotReduced;
    }
    // with the expansion in step at x, the rest of the sequence is a verified one
    bool in_step = P == x.b && Q == 2 * x.a;
    if (!(in_step && known.count(pack(x)))) {
        if (x.b >= (std::int64_t(1) << 21)) return ScanOutcome::Overflow;
        F64 x0 = x;
        thread_local std::vector<std::uint64_t> cycle;
        cycle.assign(1, pack(x0));
        do {
            step();
            if (!z(x) || steps > 2 * kCap) return ScanOutcome::NotReduced;
            cycle.push_back(pack(x));
        } while (!(x == x0));
        if (cf_ok && in_step) known.insert(cycle.begin(), cycle.end());
    }
    return cf_ok ? ScanOutcome::Ok : ScanOutcome::CfMismatch;
}

}  // namespace

ZagierScanReport scan_zagier_box(int bound) {
    if (bound < 1 || bound > 1000) throw DomainError("scan_zagier_box: bound must be in [1, 1000]");
    ZagierScanReport rep;
    Known known;
    std::int64_t B = bound;
    for (std::int64_t a = -B; a <= B; ++a)
        for (std::int64_t b = -B; b <= B; ++b)
            for (std::int64_t c = -B; c <= B; ++c) {
                std::int64_t d = b * b - 4 * a * c;
                if (d <= 0) continue;
                std::int64_t s = isqrt64(d);
                if (s * s == d) continue;
                ++rep.forms;
                ScanOutcome r = zagier64({a, b, c}, d, known);
                if (r == ScanOutcome::Overflow) {
                    // rare: fall back to exact arithmetic
                    ZagierResult z = zagier_reduce(Form(a, b, c));
                    bool zr = std::all_of(z.cycle.begin(), z.cycle.end(), is_z_reduced);
                    QuadraticIrrational w(z.entry.b, 2 * z.entry.a, Int(d));
                    ContinuedFraction m = cf_minus(w);
                    bool cf = m.terms(z.steps.size()) == z.steps;
                    r = !zr ? ScanOutcome::NotReduced : cf ? ScanOutcome::Ok : ScanOutcome::CfMismatch;
                }
                if (r != ScanOutcome::NotReduced) ++rep.reduced;
                if (r == ScanOutcome::Ok) ++rep.cf_matches;
                if (r != ScanOutcome::Ok && !rep.first_failure) rep.first_failure = Form(a, b, c);
            }
    return rep;
}

namespace {

std::vector<Int> divisors(const Int& n0) {
    Int n = abs(n0);
    std::vector<Int> small, large;
    for (Int i = 1; i * i <= n; ++i) {
        if (mpz_divisible_p(n.get_mpz_t(), i.get_mpz_t())) {
            small.push_back(i);
            if (i * i != n) large.push_back(n / i);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

std::vector<Form> z_reduced_forms(const Int& d) {
    if (d <= 0 || is_square(d)) throw DomainError("z_reduced_forms needs a positive non-square discriminant");
    std::vector<Form> out;
    // (b - a - c)(b + a + c) = d - (a - c)^2 <= d forces b < d
    for (Int b = isqrt(d) + 1; b <= d; ++b) {
        Int n = b * b - d;
        if (mod(n, 4) != 0) continue;
        n /= 4;
        for (const Int& a : divisors(n)) {
            Int c = n / a;
            if (b > a + c) out.emplace_back(a, b, c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Form> g_reduced_forms(const Int& d, bool primitive_only) {
    if (d <= 0 || is_square(d)) throw DomainError("g_reduced_forms needs a positive non-square discriminant");
    std::vector<Form> out;
    Int s = isqrt(d);
    for (Int b = 1; b <= s; ++b) {
        Int n = d - b * b;
        if (mod(n, 4) != 0) continue;
        n /= 4;
        for (const Int& a0 : divisors(n)) {
            for (int sg : {1, -1}) {
                Form f(sg * a0, b, -sg * (n / a0));
                if (!is_g_reduced(f)) continue;
                if (primitive_only && !is_primitive(f)) continue;
                out.push_back(f);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int narrow_class_number(const Int& d) {
    std::vector<Form> all = g_reduced_forms(d, true);
    std::set<Form> left(all.begin(), all.end());
    Int count = 0;
    while (!left.empty()) {
        Form start = *left.begin();
        Form x = start;
        do {
            left.erase(x);
            x = rho(x).form;
        } while (x != start);
        ++count;
    }
    return count;
}

Int definite_class_number(const Int& d) {
    if (d >= 0) throw DomainError("definite_class_number needs a negative discriminant");
    Int count = 0;
    Int nd = -d;
    for (Int a = 1; 3 * a * a <= nd; ++a) {
        for (Int b = -a + 1; b <= a; ++b) {
            Int num = b * b - d;
            if (mod(num, 4 * a) != 0) continue;
            Form f(a, b, num / (4 * a));
            if (f.c < a) continue;
            if (f.a == f.c && f.b < 0) continue;
            if (is_primitive(f)) ++count;
        }
    }
    return count;
}

FormClass class_of(const Form& f) {
    Int d = f.discriminant();
    if (d == 0 || is_square(d)) throw DomainError("class_of: discriminant must be non-zero and non-square");
    if (d < 0) {
        if (f.a > 0) return {reduce_definite(f).form};
        return {negate(reduce_definite(negate(f)).form)};
    }
    std::vector<Form> cyc = gauss_reduce_indefinite(f).cycle;
    return {*std::min_element(cyc.begin(), cyc.end())};
}

std::optional<Matrix> equivalent(const Form& f, const Form& g) {
    Int d = f.discriminant();
    if (d != g.discriminant()) return std::nullopt;
    if (d == 0 || is_square(d)) throw DomainError("equivalent: discriminant must be non-zero and non-square");
    if (d < 0) {
        if (sgn(f.a) != sgn(g.a)) return std::nullopt;
        bool neg = f.a < 0;
        Reduced rf = reduce_definite(neg ? negate(f) : f);
        Reduced rg = reduce_definite(neg ? negate(g) : g);
        if (rf.form != rg.form) return std::nullopt;
        return rf.witness * rg.witness.inverse();
    }
    GaussCycle cf = gauss_reduce_indefinite(f);
    GaussCycle cg = gauss_reduce_indefinite(g);
    const Form& target = cg.cycle[0];
    Matrix w = cf.witness;
    for (const Form& x : cf.cycle) {
        if (x == target) return w * cg.witness.inverse();
        w = w * rho(x).witness;
    }
    return std::nullopt;
}

}  // namespace bqf
