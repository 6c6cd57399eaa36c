// Acceptance run: one line per criterion, exact comparisons, pinned time limits.
#include <bqf/carks.hpp>
#include <bqf/composition.hpp>
#include <bqf/cubes.hpp>
#include <bqf/geometry.hpp>
#include <bqf/jimm.hpp>
#include <bqf/reduction.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

using namespace bqf;

namespace {

Form F(long a, long b, long c) { return Form(Int(a), Int(b), Int(c)); }

struct Outcome {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
    void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

int failures = 0;

void criterion(int n, double limit_s, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > limit_s) o.require(false, "over time limit");
    if (!o.pass) ++failures;
    std::printf("criterion %2d: %s  (%.2f s / %.0f s)  %s\n", n, o.pass ? "PASS" : "FAIL", dt, limit_s,
                o.detail.c_str());
    std::fflush(stdout);
}

std::string str(const Form& f) { return to_string(f); }

long gcd_l(long a, long b) { return std::gcd(a, b); }

bool prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// reduced primitive positive definite forms of discriminant d < 0
long brute_h(long d) {
    long n = 0;
    for (long a = 1; 3 * a * a <= -d; ++a)
        for (long b = -a + 1; b <= a; ++b) {
            if ((b * b - d) % (4 * a)) continue;
            long c = (b * b - d) / (4 * a);
            if (c < a || (c == a && b < 0)) continue;
            if (gcd_l(gcd_l(a, std::abs(b)), c) == 1) ++n;
        }
    return n;
}

bool square_l(long n) {
    if (n < 0) return false;
    long s = static_cast<long>(std::llround(std::sqrt(double(n))));
    return s * s == n;
}

// ---- 1 ----

Outcome golden() {
    Outcome o;
    Form f = F(25, 111, -33), g = F(-55, 89, 35);
    o.require(f.discriminant() == 15621 && g.discriminant() == 15621, "discriminants");
    auto fac = factor(15621);
    o.require(fac.size() == 3 && fac[0].first == 3 && fac[1].first == 41 && fac[2].first == 127, "15621 = 3*41*127");

    Matrix w = aut_generator(f);
    o.require(w == Matrix(7, 33, 25, 118), "aut_generator");
    o.require(format_blocks(w.word) == "(L²S)³(LS)(L²S)(LS)²(L²S)(LS)⁴", "automorph word");

    std::vector<Int> code = {3, 1, 1, 2, 1, 4};
    o.require(cark_of(f).code == BunchCode::canonical(code), "bunch code");

    JimmImage jf = jimm_class(f), jg = jimm_class(g);
    bool jf_ok = jf.proper == class_of(F(-43, 46, 13)) && jf.image.discriminant() == 4352;
    bool jg_ok = jg.proper == class_of(F(-63, 48, 38)) && jg.image.discriminant() == 11880;
    o.require(jf_ok, "jimm (25,111,-33): got " + str(jf.image) + " d=" + jf.image.discriminant().get_str() +
                         ", want ~(-43,46,13) d=4352");
    o.require(jg_ok, "jimm (-55,89,35): got d=" + jg.image.discriminant().get_str() + ", want ~(-63,48,38) d=11880");

    o.require(!equivalent(f, g).has_value(), "f and g inequivalent");

    o.require(identity_form(-20) == F(1, 0, 5), "identity_form(-20)");
    ClassGroup cg = class_group(-20);
    o.require(cg.order() == 2 && cg.elements[0].representative == F(1, 0, 5) &&
                  cg.elements[1].representative == F(2, 2, 3),
              "class_group(-20)");
    return o;
}

// ---- 2 ----

Outcome hirzebruch() {
    Outcome o;
    std::map<long, long> got;
    std::vector<long> skipped;
    for (long p = 3; p < 200; ++p) {
        if (!prime(p) || p % 4 != 3) continue;
        HirzebruchReport r;
        try {
            r = hirzebruch_class_number(p);
        } catch (const DomainError&) {
            skipped.push_back(p);
            continue;
        }
        long h = brute_h(-p);
        got[p] = to_int64(r.class_number);
        o.require(r.class_number == h, "p=" + std::to_string(p));
    }
    o.require(got.count(7) && got[7] == 1, "p=7 -> 1");
    o.require(got.count(11) && got[11] == 1, "p=11 -> 1");
    o.require(got.count(23) && got[23] == 3, "p=23 -> 3");
    std::string s;
    for (long p : skipped) s += (s.empty() ? "" : ",") + std::to_string(p);
    o.note(std::to_string(got.size()) + " primes checked, hypothesis excludes " + s);
    return o;
}

// ---- 3 ----

Outcome group_law() {
    Outcome o;
    int groups = 0;
    std::size_t triples = 0;
    for (long d = -400; d <= 400; ++d) {
        if (d == 0 || !is_fundamental_discriminant(d)) continue;
        ClassGroup g = class_group(d);
        AxiomReport ax = verify_axioms(g, 12, 200, static_cast<std::uint32_t>(d + 1000));
        ++groups;
        triples += ax.triples_checked;
        o.require(ax.ok(), "axioms fail for d=" + std::to_string(d));
        if (d < 0) o.require(long(g.order()) == brute_h(d), "order for d=" + std::to_string(d));
    }
    o.note(std::to_string(groups) + " groups, " + std::to_string(triples) + " triples");
    return o;
}

// ---- 4 ----

Outcome bhargava() {
    Outcome o;
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> e(-50, 50);
    int bad = 0;
    for (int i = 0; i < 100000; ++i) {
        Cube c(e(rng), e(rng), e(rng), e(rng), e(rng), e(rng), e(rng), e(rng));
        CubeForms f = cube_forms(c);
        if (f.ud.discriminant() != f.lr.discriminant() || f.lr.discriminant() != f.fb.discriminant()) ++bad;
    }
    o.require(bad == 0, std::to_string(bad) + " octuples with unequal discriminants");

    BoxScanReport box = scan_triple_product_box(4);
    o.require(box.cubes == 43046721ull, "box size");
    o.require(box.failures == 0, std::to_string(box.failures) + " box failures");
    o.note(std::to_string(box.checked) + " primitive cubes in [-4,4]^8");

    // primitive non-degenerate forms with |coefficients| <= 15, by discriminant
    std::map<long, std::vector<Form>> by_d;
    for (long a = -15; a <= 15; ++a)
        for (long b = -15; b <= 15; ++b)
            for (long c = -15; c <= 15; ++c) {
                long d = b * b - 4 * a * c;
                if (d == 0 || square_l(d) || gcd_l(gcd_l(std::abs(a), std::abs(b)), std::abs(c)) != 1) continue;
                if (d < 0 && a < 0) continue;
                by_d[d].push_back(F(a, b, c));
            }
    std::vector<long> ds;
    for (auto& [d, v] : by_d) ds.push_back(d);
    int pairs = 0, round_trip = 0, inverse_ok = 0;
    while (pairs < 500) {
        const auto& v = by_d[ds[rng() % ds.size()]];
        Form f1 = v[rng() % v.size()], f2 = v[rng() % v.size()];
        ++pairs;
        Cube c = cube_from_pair(f1, f2);
        CubeForms cf = cube_forms(c);
        if (cf.ud == f1 && cf.lr == f2 && is_primitive(c)) ++round_trip;
        if (class_of(cf.fb) == inverse(compose(class_of(f1), class_of(f2)))) ++inverse_ok;
    }
    o.require(round_trip == pairs, std::to_string(pairs - round_trip) + " round-trip failures");
    o.require(inverse_ok == pairs, std::to_string(pairs - inverse_ok) + " f_FB class failures");
    o.note(std::to_string(pairs) + " pairs");
    return o;
}

// ---- 5 ----

Outcome representation() {
    Outcome o;
    std::vector<Form> panel = {F(1, 1, -1),  F(1, 0, -2),  F(1, 0, -3),  F(2, 3, -1), F(1, 0, -7),  F(3, 5, -7),
                               F(2, 1, -2),  F(1, 1, -3),  F(1, 0, -6),  F(2, 2, -3), F(1, 2, -4),  F(1, 1, -5),
                               F(1, 0, -11), F(3, 4, -2),  F(1, 5, -1),  F(5, 7, -3), F(1, 0, -13), F(2, 1, -5),
                               F(3, 1, -1),  F(25, 111, -33),
                               F(1, 0, 1),   F(1, 1, 1),   F(1, 0, 2),   F(1, 1, 2),  F(2, 1, 3),   F(1, 0, 5),
                               F(2, 2, 3),   F(3, 2, 5),   F(2, 1, 2),   F(1, 1, 6)};
    const long R = 60;
    std::size_t total = 0, outside = 0, calls = 0;
    bool monotone = true;
    for (const Form& f : panel) {
        if (f.discriminant() == 0 || is_square(f.discriminant()) || !is_primitive(f)) {
            o.require(false, "bad panel form " + str(f));
            continue;
        }
        long a = to_int64(f.a), b = to_int64(f.b), c = to_int64(f.c);
        std::map<long, std::set<std::pair<Int, Int>>> brute;
        for (long x = -R; x <= R; ++x)
            for (long y = -R; y <= R; ++y) {
                long v = a * x * x + b * x * y + c * y * y;
                if (v == 0 || std::abs(v) > 50 || gcd_l(std::abs(x), std::abs(y)) != 1) continue;
                brute[v].insert(orbit_representative(f, {Int(x), Int(y)}));
            }
        for (long N = -50; N <= 50; ++N) {
            if (N == 0) continue;
            Representation r = represent(f, N);
            ++calls;
            monotone = monotone && r.monotone;
            std::set<std::pair<Int, Int>> got(r.solutions.begin(), r.solutions.end());
            const auto& want = brute[N];
            for (const auto& v : want)
                if (!got.count(v)) o.require(false, "missing " + str(f) + " N=" + std::to_string(N));
            for (const auto& v : got) {
                if (want.count(v)) continue;
                bool in_box = abs(v.first) <= R && abs(v.second) <= R;
                bool valid = f(v.first, v.second) == N && gcd(v.first, v.second) == 1;
                if (in_box || !valid)
                    o.require(false, "extra " + str(f) + " N=" + std::to_string(N));
                else
                    ++outside;
            }
            total += got.size();
        }
    }
    o.require(monotone, "face labels not increasing away from the spine");
    o.note(std::to_string(calls) + " searches, " + std::to_string(total) + " orbits, " + std::to_string(outside) +
           " beyond the box");
    return o;
}

// ---- 6 ----

Outcome zagier() {
    Outcome o;
    ZagierScanReport z = scan_zagier_box(100);
    o.require(z.reduced == z.forms, std::to_string(z.forms - z.reduced) + " forms not reaching a Z-reduced cycle");
    o.require(z.cf_matches == z.forms, std::to_string(z.forms - z.cf_matches) + " step/expansion mismatches");
    if (z.first_failure) o.note("first failure " + str(*z.first_failure));
    struct Row {
        long D;
        std::vector<Int> head, period;
    };
    for (const Row& r : {Row{7, {3}, {3, 6}}, Row{11, {4}, {2, 2, 8}}, Row{23, {5}, {5, 10}}}) {
        ContinuedFraction cf = cf_minus(QuadraticIrrational(0, 1, r.D));
        o.require(cf.head == r.head && cf.period == r.period, "cf_minus(sqrt " + std::to_string(r.D) + ")");
    }
    o.note(std::to_string(z.forms) + " forms");
    return o;
}

// ---- 7 ----

Outcome pell_suite() {
    Outcome o;
    PellSolution two = pell(2);
    o.require(two.t == 3 && two.u == 2, "pell(2)");
    int checked = 0;
    for (long D = 2; D <= 50; ++D) {
        if (square_l(D)) continue;
        long u = 1;
        while (!square_l(D * u * u + 1)) ++u;
        long t = static_cast<long>(std::llround(std::sqrt(double(D * u * u + 1))));
        PellSolution s = pell(D);
        o.require(s.t == t && s.u == u, "pell(" + std::to_string(D) + ")");
        ++checked;
    }
    PellSolution big = pell(4729494);
    o.require(big.t * big.t - 4729494 * big.u * big.u == 1, "cattle instance");
    o.note(std::to_string(checked) + " D values; cattle t has " + std::to_string(big.t.get_str().size()) + " digits");
    return o;
}

// ---- 8 ----

Outcome jimm_suite() {
    Outcome o;
    std::mt19937 rng(8);
    std::uniform_int_distribution<long> e(-40, 40);
    int done = 0, exceptional = 0, involution = 0, well_defined = 0, proper_agree = 0;
    while (done < 100) {
        Form f = F(e(rng), e(rng), e(rng));
        Int d = f.discriminant();
        if (d <= 0 || is_square(d) || !is_primitive(f)) continue;
        JimmImage im;
        try {
            im = jimm_class(f);
        } catch (const DomainError&) {
            ++exceptional;
            continue;
        }
        ++done;
        if (jimm_class(im.image).proper == class_of(f)) ++involution;
        bool same = true, same_proper = true;
        for (int k = 0; k < 3; ++k) {
            Matrix g = Matrix(1, e(rng), 0, 1) * Matrix(1, 0, e(rng), 1) * Matrix(1, e(rng), 0, 1);
            JimmImage other = jimm_class(act(g, f));
            same = same && other.extended == im.extended;
            same_proper = same_proper && other.proper == im.proper;
        }
        if (same) ++well_defined;
        if (same_proper) ++proper_agree;
    }
    o.require(involution == done, std::to_string(done - involution) + " involution failures");
    o.require(well_defined == done, std::to_string(done - well_defined) + " representative dependence");
    o.note(std::to_string(done) + " forms, " + std::to_string(exceptional) + " exceptional skipped, proper class stable in " +
           std::to_string(proper_agree));
    return o;
}

// ---- 9 ----

Outcome penner() {
    Outcome o;
    std::mt19937 rng(9);
    std::uniform_int_distribution<long> num(-60, 60), den(1, 60);
    int bad = 0;
    for (int i = 0; i < 10000; ++i) {
        GaussianRationalPoint p(Rat(num(rng), den(rng)), Rat(den(rng), den(rng)));
        Int b2 = p.beta() * p.beta();
        if (form_of_point(p).discriminant() != -4 * b2 * b2 * p.gamma() * p.delta()) ++bad;
    }
    o.require(bad == 0, std::to_string(bad) + " discriminant identity failures");

    std::vector<Form> domain;
    for (long a = 1; a <= 40; ++a)
        for (long b = -40; b <= 40; ++b)
            for (long c = 1; c <= 40; ++c) {
                long d = b * b - 4 * a * c;
                if (d < 0 && square_l(-d)) domain.push_back(F(a, b, c));
            }
    std::size_t pairs = 0, locus_only = 0, unitable_only = 0;
    for (std::size_t i = 0; i < domain.size(); ++i)
        for (std::size_t j = i + 1; j < domain.size(); ++j) {
            ++pairs;
            bool h = common_locus(domain[i], domain[j]).has_value();
            bool u = is_unitable(domain[i], domain[j]);
            if (h && !u) ++locus_only;
            if (u && !h) ++unitable_only;
        }
    o.require(locus_only == 0, std::to_string(locus_only) + " pairs on a locus but not unitable");
    o.require(unitable_only == 0, std::to_string(unitable_only) + " of " + std::to_string(pairs) +
                                      " pairs unitable with no common locus, e.g. (1,0,1),(2,2,5)");
    o.require(product_point_check(F(4, -4, 5), F(5, -4, 4)), "product point (4,-4,5)(5,-4,4)");
    o.note(std::to_string(domain.size()) + " forms in the exact domain");
    return o;
}

// ---- 10 ----

Outcome identities() {
    Outcome o;
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<long> x(-1000000, 1000000);
    int bad_b = 0, bad_l = 0;
    for (int i = 0; i < 10000; ++i) {
        Int X = x(rng), Y = x(rng), Xp = x(rng), Yp = x(rng), N = x(rng);
        for (int s : {1, -1})
            for (const Int& n : {N, Int(-N)})
                if (!brahmagupta_holds(X, Y, Xp, Yp, n, s)) ++bad_b;
        if (!lagrange_holds(X, Y, Xp, Yp)) ++bad_l;
    }
    o.require(bad_b == 0, std::to_string(bad_b) + " Brahmagupta failures");
    o.require(bad_l == 0, std::to_string(bad_l) + " Lagrange failures");
    o.note("10000 tuples");
    return o;
}

}  // namespace

int main() {
    criterion(1, 1, golden);
    criterion(2, 5, hirzebruch);
    criterion(3, 30, group_law);
    criterion(4, 60, bhargava);
    criterion(5, 30, representation);
    criterion(6, 10, zagier);
    criterion(7, 10, pell_suite);
    criterion(8, 10, jimm_suite);
    criterion(9, 10, penner);
    criterion(10, 5, identities);
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
