#pragma once

// Inductive construction of a symmetric nondegenerate Hopf pairing on H_NCK.
//
// Degree by degree, H_n = (g n H+^2)_n + m_n + h_n + w_n. Decomposable
// forests pair through <xy, z> = <x (x) y, Delta z> with the lower-degree
// forms. A generator v in h_n pairs by the chosen base form on h_n and kills
// H+^2 and w_n; a generator v in w_n kills h_n and w_n and evaluates on a
// product of trees t_1...t_k through the (k-1)-fold reduced coproduct of v
// paired factorwise with the forms already built.

#include "hopf/exactla.hpp"
#include "hopf/hopfstruct.hpp"
#include "hopf/nck.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hopf::pairing {

struct GeneratorFunctional {
    enum class Block { H, W };
    Block block = Block::H;
    std::vector<Rational> generator;   // coordinates of v in H_n
    std::vector<Rational> functional;  // <v, b_j> for every basis forest b_j of H_n
};

struct PairingState {
    int max_degree = 0;
    std::vector<la::Matrix> gram;  // gram[n](i, j) = <b_i, b_j> on the degree-n forest basis
    std::vector<structure::DegreeDecomposition> decomposition;  // index n >= 1; entry 0 is empty
    std::vector<la::Matrix> base_form;                           // on the basis of h_n
    std::vector<std::vector<GeneratorFunctional>> generators;    // per degree
};

class DegenerateBaseForm : public DomainError {
public:
    DegenerateBaseForm(int degree);
    int degree;
};

/// Identity forms on every h_n, n = 1..max_degree (entry 0 is empty).
std::vector<la::Matrix> identity_base_forms(const structure::Analyzer& analyzer, int max_degree);

/// base_forms[n] must be a symmetric matrix of size dim h_n; throws
/// DegenerateBaseForm when one has zero determinant.
PairingState build_pairing(const structure::Analyzer& analyzer, int max_degree,
                           const std::vector<la::Matrix>& base_forms);
PairingState build_pairing(const structure::Analyzer& analyzer, int max_degree);

struct Violation {
    std::string check;
    int degree = 0;
    std::vector<std::string> triple;  // forests (x, y, z) or the offending entry
    std::string detail;
};

struct VerificationReport {
    bool counit = true;            // <x, 1> = eps(x)
    bool multiplicativity = true;  // <xy, z> = <x (x) y, Delta z> and <z, xy> = <Delta z, x (x) y>
    bool homogeneity = true;       // one square block per degree, sized dim H_n
    bool symmetry = true;
    bool nondegeneracy = true;
    bool restriction = true;  // restriction to h_n equals the base form
    std::size_t triples_checked = 0;
    std::vector<Violation> violations;  // first counterexample of each failing check

    bool pass() const {
        return counit && multiplicativity && homogeneity && symmetry && nondegeneracy && restriction;
    }
};

/// Exhaustive over basis triples of total degree <= max_degree. The
/// multiplicativity sweep runs in parallel over the third forest.
VerificationReport verify_hopf_pairing(const nck::Algebra& algebra, const PairingState& state);

struct OrthogonalityReport {
    int degree = 0;
    bool lower_degrees_nondegenerate = false;
    std::size_t dim_orthogonal = 0;
    std::size_t dim_primitives = 0;
    bool pass = false;  // ((H+^2)_n)^perp == g_n
};

OrthogonalityReport check_orthogonality(const structure::Analyzer& analyzer, const PairingState& state, int n);

struct AdaptedDegree {
    structure::DegreeDecomposition decomposition;  // w replaced by the adapted complement
    la::Matrix basis;                              // rows: core, m, h, adapted w
    la::Matrix gram;                               // pairing in that basis
    std::size_t dim_core = 0;
    std::size_t dim_m = 0;
    std::size_t dim_h = 0;
    bool block_form = false;
};

/// Rebases w_n so that it is dual to the core basis and orthogonal to m_n,
/// h_n and itself; afterwards the Gram matrix in the adapted basis is
///   [0 0 0 I; 0 A 0 0; 0 0 B 0; I 0 0 0] with A, B symmetric invertible.
AdaptedDegree adapt_complement(const PairingState& state, int n);

/// Checks the block pattern above for block sizes (c, m, h, c).
bool has_adapted_block_form(const la::Matrix& gram, std::size_t dim_core, std::size_t dim_m, std::size_t dim_h);

}  // namespace hopf::pairing
