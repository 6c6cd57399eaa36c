#include "bqf/geometry.hpp"

#include <algorithm>

#include "bqf/composition.hpp"

namespace bqf {

GaussianRationalPoint::GaussianRationalPoint(Rat u_, Rat v_) : u(std::move(u_)), v(std::move(v_)) {
    u.canonicalize();
    v.canonicalize();
    if (v <= 0) throw DomainError("point must lie in the upper half-plane (v > 0)");
}

std::string to_string(const GaussianRationalPoint& p) { return p.u.get_str() + " + " + p.v.get_str() + "i"; }

Form form_of_point(const GaussianRationalPoint& w) {
    Int al = w.alpha(), be = w.beta(), ga = w.gamma(), de = w.delta();
    return Form(be * be * de, -2 * al * be * de, al * al * de + be * be * ga);
}

bool in_exact_domain(const Form& f) {
    Int d = f.discriminant();
    return d < 0 && f.a > 0 && is_square(-d);
}

GaussianRationalPoint point_of_form(const Form& f) {
    Int d = f.discriminant();
    if (d >= 0 || f.a <= 0) throw DomainError("point_of_form needs a positive definite form");
    if (!is_square(-d))
        throw DomainError("point of " + to_string(f) + " lies outside Q(i): |discriminant| " + Int(-d).get_str() +
                          " is not a square");
    return GaussianRationalPoint(Rat(-f.b, 2 * f.a), Rat(isqrt(-d), 2 * f.a));
}

bool Locus::contains(const GaussianRationalPoint& p) const {
    switch (kind) {
        case Kind::HorocycleAtInfinity: return 2 * p.v == param;
        case Kind::Line: return p.v == param * p.u;
        case Kind::HorocycleAtZero: return param * p.norm() == 2 * p.v;
    }
    return false;
}

const char* kind_name(Locus::Kind k) {
    switch (k) {
        case Locus::Kind::HorocycleAtInfinity: return "horocycle-at-infinity";
        case Locus::Kind::Line: return "line";
        case Locus::Kind::HorocycleAtZero: return "horocycle-at-zero";
    }
    return "?";
}

std::string to_string(const Locus& h) {
    std::string p = h.param.get_str();
    switch (h.kind) {
        case Locus::Kind::HorocycleAtInfinity: return "v = " + p + "/2";
        case Locus::Kind::Line: return "v = " + p + "u";
        case Locus::Kind::HorocycleAtZero: return "u^2 + (v - 1/" + p + ")^2 = 1/" + p + "^2";
    }
    return "?";
}

std::optional<Locus> common_locus(const Form& f1, const Form& f2) {
    GaussianRationalPoint p = point_of_form(f1), q = point_of_form(f2);
    if (p.v == q.v) return Locus{Locus::Kind::HorocycleAtInfinity, 2 * p.v};
    if (p.u != 0 && q.u != 0) {
        Rat s = p.v / p.u;
        if (s == q.v / q.u) return Locus{Locus::Kind::Line, s};
    }
    Rat g = 2 * p.v / p.norm();
    if (g == 2 * q.v / q.norm()) return Locus{Locus::Kind::HorocycleAtZero, g};
    return std::nullopt;
}

ProductPointReport product_point_report(const Form& f1, const Form& f2, long window) {
    if (!in_exact_domain(f1) || !in_exact_domain(f2))
        throw DomainError("product_point_check needs positive definite forms with square |discriminant|");
    if (!is_primitive(f1) || !is_primitive(f2)) throw DomainError("product_point_check needs primitive forms");
    if (!is_concordant(f1, f2)) throw DomainError("product_point_check needs a concordant pair");
    auto h = common_locus(f1, f2);
    if (!h) throw DomainError("product_point_check: the two points share no locus");

    ProductPointReport rep;
    rep.locus = *h;
    rep.product = dirichlet_product(f1, f2);
    GaussianRationalPoint w = point_of_form(rep.product);
    rep.on_locus = h->contains(w);
    FormClass target = class_of(rep.product);
    Int d = rep.product.discriminant();
    rep.closest = true;
    if (fits_int64(rep.product.a) && fits_int64(rep.product.b))
        window = std::max<long>({window, to_int64(rep.product.a), to_int64(abs(rep.product.b))});
    for (long a = 1; a <= window; ++a) {
        for (long b = -window; b <= window; ++b) {
            ++rep.candidates;
            Int num = Int(b) * b - d;
            if (mod(num, 4 * a) != 0) continue;
            Form g(a, b, num / (4 * a));
            if (!h->contains(point_of_form(g))) continue;
            if (!is_primitive(g) || class_of(g) != target) continue;
            ++rep.members;
            if (point_of_form(g).norm() < w.norm()) rep.closest = false;
        }
    }
    return rep;
}

bool product_point_check(const Form& f1, const Form& f2) { return product_point_report(f1, f2).ok(); }

}  // namespace bqf
