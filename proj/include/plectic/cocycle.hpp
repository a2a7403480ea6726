#pragma once

#include <array>
#include <map>
#include <vector>

#include "plectic/atiyah.hpp"
#include "plectic/courant.hpp"
#include "plectic/report.hpp"

namespace plectic {

// Open axis-aligned box with rational corners.
struct Box {
    std::vector<Rational> lo, hi;
};

// Finite open box cover of a region of the chart. Coefficient identities
// checked on an open box extend to the whole chart, so every verification
// below is exact and global; the boxes only decide which overlaps exist.
class BoxCover {
public:
    BoxCover(ChartPtr chart, std::vector<Box> boxes);

    const ChartPtr& chart() const { return chart_; }
    const std::vector<Box>& boxes() const { return boxes_; }
    std::size_t size() const { return boxes_.size(); }

    bool overlap(std::size_t i, std::size_t j) const;
    bool overlap3(std::size_t i, std::size_t j, std::size_t k) const;
    bool overlap4(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const;

private:
    ChartPtr chart_;
    std::vector<Box> boxes_;
};

// Primitive data for a closed two-form: one-form potentials per box and
// transition functions per ordered overlap (i < j).
struct LocalData1 {
    std::vector<DifferentialForm> theta;
    std::map<std::pair<std::size_t, std::size_t>, RationalFunction> h;
};

// Primitive data for a closed three-form: two-form potentials per box,
// transition one-forms per overlap, and functions per triple overlap.
struct LocalData2 {
    std::vector<DifferentialForm> B;
    std::map<std::pair<std::size_t, std::size_t>, DifferentialForm> A;
    std::map<std::array<std::size_t, 3>, RationalFunction> h;
};

// Whether cocycle constants live in the reals (must merely be constant) or
// on the circle (must be integers).
enum class Periodicity { Real, Circle };

// Residual of the invariant-field bracket under the shear
// (v, f) -> (v, f - i(v) sigma); zero for all sections iff d(sigma) = 0.
RationalFunction atiyah_shear_residual(const PlecticStructure& P, const DifferentialForm& sigma,
                                       const AtiyahSection& a, const AtiyahSection& b);

// Form-part residual of the split-model bracket under
// (v, a) -> (v, a - i(v) S); zero for all sections iff d(S) = 0.
DifferentialForm courant_shear_residual(const SplitCourantModel& M, const DifferentialForm& S,
                                        const GeneralizedSection& e1,
                                        const GeneralizedSection& e2);

// Full validation of two-form primitive data: completeness, d(theta_i) = w,
// theta_j - theta_i = d(h_ij), constancy (and integrality on the circle) of
// h_jk - h_ik + h_ij on triple overlaps, and shear equivariance of the
// transition forms.
Report verify_triv_2form(const DifferentialForm& omega, const BoxCover& cover,
                         const LocalData1& data, Periodicity mode);

// Full validation of three-form primitive data: completeness, d(B_i) = w,
// B_j - B_i = d(A_ij), A_jk - A_ik + A_ij = d(h_ijk), constancy (and
// integrality on the circle) of the alternating sum on quadruple overlaps,
// and shear equivariance of the transition forms.
Report verify_triv_3form(const DifferentialForm& omega, const BoxCover& cover,
                         const LocalData2& data, Periodicity mode);

}  // namespace plectic
