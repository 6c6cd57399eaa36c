#pragma once

#include <map>
#include <vector>

#include "bqf/forms.hpp"

namespace bqf {

Int squarefree_part(const Int& n);  // signed
bool is_unitable(const Form& f1, const Form& f2);
bool is_concordant(const Form& f1, const Form& f2);

struct ConcordantPair {
    Form g1, g2;
    Matrix w1, w2;  // act(w1, f1) == g1, act(w2, f2) == g2
};
ConcordantPair concordant_pair(const Form& f1, const Form& f2);
ConcordantPair concordant_pair(const FormClass& c1, const FormClass& c2);

// Dirichlet product of a concordant pair: (a1 a2, b, c).
Form dirichlet_product(const Form& g1, const Form& g2);
Form compose_forms(const Form& f1, const Form& f2);  // not reduced
FormClass compose(const FormClass& c1, const FormClass& c2);

Form identity_form(const Int& d);
FormClass inverse(const FormClass& c);
bool is_ambiguous(const Form& f);

struct ClassGroup {
    Int discriminant;
    std::vector<FormClass> elements;        // sorted, canonical representatives
    std::vector<std::vector<int>> table;    // table[i][j] = index of elements[i] * elements[j]
    int identity = 0;
    std::vector<int> inverse;

    std::size_t order() const { return elements.size(); }
    int index_of(const FormClass& c) const;  // -1 if absent
    int index_of_form(const Form& f) const;  // class lookup
    int multiply(int i, int j) const { return table[i][j]; }
    int element_order(int i) const;
};

// Primitive classes of discriminant d with the full multiplication table.
ClassGroup class_group(const Int& d);

struct AxiomReport {
    bool closure = true, identity = true, inverses = true, commutative = true, associative = true;
    std::size_t triples_checked = 0;
    bool ok() const { return closure && identity && inverses && commutative && associative; }
};
// Full associativity if order <= full_limit, otherwise `random_triples` seeded triples.
AxiomReport verify_axioms(const ClassGroup& g, std::size_t full_limit = 12, std::size_t random_triples = 200,
                          unsigned seed = 1);

bool is_fundamental_discriminant(const Int& d);

// Classical identities, evaluated exactly.
// (X^2 + N Y^2)(X'^2 + N Y'^2) = (XX' - s N YY')^2 + N (XY' + s X'Y)^2, s = +-1
bool brahmagupta_holds(const Int& X, const Int& Y, const Int& Xp, const Int& Yp, const Int& N, int s);
// Lagrange: (2x^2+2xy+3y^2)(2x'^2+2x'y'+3y'^2) = X^2 + 5Y^2
bool lagrange_holds(const Int& x, const Int& y, const Int& xp, const Int& yp);

}  // namespace bqf
