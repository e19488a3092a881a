#ifndef HYPERCX_CR_HPP
#define HYPERCX_CR_HPP

#include "hypercx/operators.hpp"

#include <map>
#include <string>
#include <vector>

namespace hypercx {

/// Canonicalized list of linear relations among first partials of component
/// functions: row column (p * ncoord + k) is the coefficient of df_p/dx_k.
/// Rows are the reduced row echelon basis, so two systems are equal exactly
/// when their row lists are equal.
struct CRSystem {
    int ncomp = 0;
    int ncoord = 0;
    std::vector<RowVec> rows;

    bool operator==(const CRSystem& other) const = default;
};

/// Expands sum_k c_k df/dx_k = 0 with f = sum_p basis_p f_p through the
/// structure constants and collects per basis component.
CRSystem derive_cr(const AlgebraPtr& alg, const std::vector<std::string>& op_names);

/// Sub-system supported on the given components/coordinates: the exact
/// intersection of the row space with that coordinate block.
CRSystem restrict_block(const CRSystem& sys, const std::vector<int>& comps,
                        const std::vector<int>& coords);

std::vector<std::string> describe_rows(const CRSystem& sys);

// --- Paired-variable (Wirtinger) form ---------------------------------------

struct PairCoeff {
    Rational re, im; // re + I im with I^2 = inner_square
    bool operator==(const PairCoeff&) const = default;
};

/// A system over two paired components F0, F1 and paired coordinates; the
/// inner unit squares to inner_square. Used for the golden systems that the
/// source text states in complex/hyperbolic-complex variables and for the
/// paired presentation of derived systems.
struct WirtingerSystem {
    AlgebraPtr alg;
    int inner_square = -1;
    std::vector<std::string> coord_names;
    std::vector<bool> coord_conj; // conjugated coordinate (d/dzbar style)
    std::vector<std::vector<PairCoeff>> rows; // (P * ncoord + c)
};

/// Real-coordinate expansion of a paired system through the algebra grouping.
CRSystem realify(const WirtingerSystem& w);

/// Paired presentation of a real system; empty if the row space is not the
/// realification of any paired system.
std::vector<std::vector<PairCoeff>> wirtinger_presentation(const CRSystem& sys,
                                                           const AlgebraPtr& alg,
                                                           bool with_conjugates);

// --- Golden systems ----------------------------------------------------------

const std::vector<std::string>& golden_ids();
CRSystem golden_system(const std::string& id);

struct Diff {
    bool equal = false;
    std::vector<std::string> missing; // golden relations absent from derived
    std::vector<std::string> extra;   // derived relations absent from golden
};

Diff golden_compare(const CRSystem& derived, const std::string& golden_id);

// --- Second-order consequences ----------------------------------------------

/// One pure second-order relation for a single component: coefficient per
/// unordered coordinate pair. Real systems use only the re part.
struct SecondOrderRelation {
    int component = 0;
    std::map<std::pair<int, int>, PairCoeff> terms;
};

/// Per-component elimination result. real_span is the canonical basis of all
/// pure second-order relations the system implies for this component, over
/// columns (pair index, re/im part); presented pairs it back into ring
/// coefficients when possible.
struct ComponentConsequences {
    int component = 0;
    bool grouped = false;
    int inner_square = 1;
    int ncoord = 0;
    std::vector<RowVec> real_span;
    std::vector<SecondOrderRelation> presented;
};

/// Differentiates each relation by each coordinate and eliminates foreign
/// partials by exact rational linear algebra. Throws EliminationFailed when
/// no component admits any pure second-order consequence.
std::vector<ComponentConsequences> second_order_consequences(const CRSystem& sys);
std::vector<ComponentConsequences> second_order_consequences(const WirtingerSystem& sys);

/// True iff the relation space found for the component equals the span of
/// the expected relations (with ring multiples folded in for grouped mode).
bool consequences_match(const std::vector<ComponentConsequences>& all, int component,
                        const std::vector<SecondOrderRelation>& expected);

} // namespace hypercx

#endif
