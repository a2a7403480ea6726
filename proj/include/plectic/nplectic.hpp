#pragma once

#include <cstdint>
#include <optional>

#include "plectic/exterior.hpp"
#include "plectic/form.hpp"
#include "plectic/report.hpp"

namespace plectic {

// Witness that the contraction map v -> iota(v, omega) drops rank at a
// rational point.
struct DegeneratePoint {
    std::vector<Rational> point;
    std::vector<Rational> kernel_vector;
};

// Outcome of the pointwise-injectivity analysis of v -> iota(v, omega).
//  CertifiedEverywhere: some full-size minor of the contraction matrix is a
//                       nonzero constant, so the map is injective at every
//                       point; `witness_rows` names the minor.
//  GenericOnly:         full rank over the rational-function field, but no
//                       constant minor was found and no degenerate rational
//                       point was sampled.
//  DegenerateAt:        a rational point with a kernel vector was found.
struct NondegeneracyVerdict {
    enum class Kind { CertifiedEverywhere, GenericOnly, DegenerateAt };
    Kind kind = Kind::GenericOnly;
    std::vector<std::size_t> witness_rows;
    std::optional<DegeneratePoint> degenerate;

    std::string describe() const;
};

NondegeneracyVerdict check_nondegenerate(const DifferentialForm& omega, std::uint64_t seed = 0);

// Raised when a form has no structure-compatible vector field; carries the
// nonzero residual d(alpha) + iota(v, omega) for the best-effort v.
struct NotHamiltonianError : Error {
    explicit NotHamiltonianError(DifferentialForm r)
        : Error("no compatible vector field; residual = " + r.str()), residual(std::move(r)) {}
    DifferentialForm residual;
};

// Raised when a vector field admits no primitive (n-1)-form; carries the
// nonzero obstruction d(iota(v, omega)).
struct NoPrimitiveError : Error {
    explicit NoPrimitiveError(DifferentialForm r)
        : Error("field has no primitive form; d(iota(v,w)) = " + r.str()),
          residual(std::move(r)) {}
    DifferentialForm residual;
};

// A closed (n+1)-form omega on the chart, with its nondegeneracy verdict
// computed at construction. Operations that solve against omega refuse to
// run when the verdict is DegenerateAt.
class PlecticStructure {
public:
    explicit PlecticStructure(DifferentialForm omega, std::uint64_t seed = 0);

    const DifferentialForm& omega() const { return omega_; }
    const ChartPtr& chart() const { return omega_.chart(); }
    // Degree of Hamiltonian forms is n-1; omega has degree n+1.
    int n() const { return omega_.degree() - 1; }
    const NondegeneracyVerdict& verdict() const { return verdict_; }

    // Throws DegenerateStructure when solving against omega is refused.
    void require_solvable() const;

private:
    DifferentialForm omega_;
    NondegeneracyVerdict verdict_;
};

// The unique v with d(alpha) = -iota(v, omega). Throws NotHamiltonianError
// when no such field exists and DegenerateStructure when omega is refused.
VectorField hamiltonian_vf(const PlecticStructure& P, const DifferentialForm& alpha);

// A primitive alpha with d(alpha) = -iota(v, omega), built by the radial
// homotopy. Throws NoPrimitiveError when -iota(v, omega) is not closed.
DifferentialForm hamiltonian_form_of(const PlecticStructure& P, const VectorField& v);

// Semi-bracket {a, b} = iota(v_b, iota(v_a, omega)), an (n-1)-form.
DifferentialForm semi_bracket(const PlecticStructure& P, const DifferentialForm& a,
                              const DifferentialForm& b);

// Trilinear obstruction iota(v_a, iota(v_b, iota(v_c, omega))), an
// (n-2)-form; equals omega(v_c, v_b, v_a) under the slot convention.
DifferentialForm jacobiator_J(const PlecticStructure& P, const DifferentialForm& a,
                              const DifferentialForm& b, const DifferentialForm& c);

// The three semi-bracket laws on a triple of Hamiltonian forms.
Report verify_prop35(const PlecticStructure& P, const DifferentialForm& a,
                     const DifferentialForm& b, const DifferentialForm& c);

// The three auxiliary calculus identities on a triple of Hamiltonian forms.
Report verify_lemmas(const PlecticStructure& P, const DifferentialForm& a,
                     const DifferentialForm& b, const DifferentialForm& c);

}  // namespace plectic
