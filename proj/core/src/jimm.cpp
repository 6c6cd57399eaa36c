#include "bqf/jimm.hpp"

namespace bqf {

std::vector<Int> jimm_rewrite(const std::vector<Int>& terms) {
    if (terms.empty() || terms[0] < 1) throw DomainError("jimm_rewrite: leading term must be >= 1");
    std::vector<Int> out;
    bool pending = false;  // a run 1_{-1} waiting to merge its neighbours
    auto run = [&](const Int& k) {
        if (k == -1)
            pending = true;
        else
            for (Int i = 0; i < k; ++i) out.push_back(1);
    };
    run(terms[0] - 1);
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (terms[i] < 1) throw DomainError("jimm_rewrite: partial quotients must be >= 1");
        if (pending) {
            out.back() += 1;  // [.., a, 1_{-1}, 2, ..] -> [.., a + 1, ..]
            pending = false;
        } else {
            out.push_back(2);
        }
        run(terms[i] - 2);
    }
    return out;
}

namespace {

bool is_noble(const ContinuedFraction& cf) {
    ContinuedFraction c = cf.canonical();
    return c.period.size() == 1 && c.period[0] == 1;
}

// Eventual period of a long rewritten window.
ContinuedFraction find_period(const std::vector<Int>& seq) {
    const std::size_t n = seq.size(), margin = 20;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t L = 1; L < n / 3; ++L) {
            if (n < L + margin + i || n - L - margin - i <= 3 * L) break;
            bool ok = true;
            for (std::size_t j = i; j + L + margin < n && ok; ++j) ok = seq[j] == seq[j + L];
            if (ok) {
                ContinuedFraction cf;
                cf.flavor = Flavor::Plus;
                cf.head.assign(seq.begin(), seq.begin() + i);
                cf.period.assign(seq.begin() + i, seq.begin() + i + L);
                return cf.canonical();
            }
        }
    }
    throw std::logic_error("jimm: image period not found");
}

QuadraticIrrational jimm_positive(const ContinuedFraction& cf) {
    std::size_t copies = std::max<std::size_t>(12, 400 / cf.period.size() + 4);
    std::vector<Int> terms = cf.terms(cf.head.size() + copies * cf.period.size());
    return value_of(find_period(jimm_rewrite(terms)));
}

}  // namespace

QuadraticIrrational jimm_value(const QuadraticIrrational& x) {
    ContinuedFraction cf = cf_plus(x);
    if (is_noble(cf)) throw DomainError("jimm: noble numbers are exceptional");
    Int a0 = cf.terms(1)[0];
    if (a0 < 0) return jimm_value(x.negated()).reciprocal().negated();
    if (a0 == 0) return jimm_value(x.reciprocal()).reciprocal();
    return jimm_positive(cf);
}

ContinuedFraction jimm_cf(const ContinuedFraction& cf) {
    if (cf.flavor != Flavor::Plus) throw DomainError("jimm_cf expects a plus continued fraction");
    if (cf.period.empty()) throw DomainError("jimm: rational input is unsupported");
    if (is_noble(cf)) throw DomainError("jimm: noble numbers are exceptional");
    return cf_plus(jimm_value(value_of(cf)));
}

JimmImage jimm_class(const Form& f) {
    Int d = f.discriminant();
    if (d <= 0 || is_square(d)) throw DomainError("jimm_class needs an indefinite form with non-square discriminant");
    if (!is_primitive(f)) throw DomainError("jimm_class needs a primitive form");
    JimmImage out;
    out.image = form_with_root(jimm_value(root_of(f)));
    out.proper = class_of(out.image);
    FormClass flip = class_of(Form(-out.image.a, out.image.b, -out.image.c));
    out.extended = std::min(out.proper, flip);
    return out;
}

}  // namespace bqf
