#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fgeom/galois.hpp"
#include "fgeom/projgeom.hpp"

namespace fgeom {

// Nonidentity N-qubit Pauli operator modulo phase: a pair (a|b) of GF(2)
// N-vectors stored interleaved, factor i at bits 2i (X part) and 2i+1
// (Z part).  Factor letters by (a_i, b_i): (0,0) I, (1,0) X, (1,1) Y,
// (0,1) Z.  As a point of PG(2N-1,2) the code is the coordinate vector.
class PauliOperator {
  public:
    static PauliOperator from_label(std::string_view label);
    static PauliOperator from_code(uint32_t code, int n);

    int qubits() const { return n_; }
    uint32_t code() const { return code_; }
    uint32_t x_bits() const;
    uint32_t z_bits() const;
    F2Vec point() const { return F2Vec(code_, 2 * n_); }
    std::string label() const;

    friend bool operator==(const PauliOperator& a, const PauliOperator& b) {
        return a.n_ == b.n_ && a.code_ == b.code_;
    }
    friend bool operator<(const PauliOperator& a, const PauliOperator& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.code_ < b.code_;
    }

  private:
    PauliOperator(uint32_t code, int n) : code_(code), n_(n) {}

    uint32_t code_ = 0;
    int n_ = 0;
};

// Zero symplectic pairing of the (a|b) vectors.
bool commutes(const PauliOperator& p, const PauliOperator& q);

// Even number of Y factors, i.e. a.b = 0.
bool is_symmetric(const PauliOperator& p);

// All symmetric operators on n qubits, ascending by code; coincides with
// the standard hyperbolic quadric under the (a|b) identification.
std::vector<PauliOperator> symmetric_set(int n);

// All maximal totally isotropic subspaces of W(2n-1,2); each one carries a
// maximal set of 2^n - 1 pairwise commuting operators.
std::vector<SubspaceF2> maximal_commuting_sets(int n);

}  // namespace fgeom
