#include "fgeom/pauli.hpp"

#include <bit>

#include "fgeom/bitvec.hpp"
#include "fgeom/forms.hpp"
#include "maximal_subspaces.hpp"

namespace fgeom {

namespace {
constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};  // indexed by b<<1 | a

int letter_code(char c) {
    switch (c) {
        case 'I': return 0;
        case 'X': return 1;
        case 'Z': return 2;
        case 'Y': return 3;
        default: return -1;
    }
}
}  // namespace

PauliOperator PauliOperator::from_label(std::string_view label) {
    const int n = int(label.size());
    if (n < 2) throw std::invalid_argument("PauliOperator: label needs at least two factors");
    if (2 * n > kMaxCoords) throw std::invalid_argument("PauliOperator: label too long");
    uint32_t code = 0;
    for (int i = 0; i < n; ++i) {
        int lc = letter_code(label[i]);
        if (lc < 0)
            throw std::invalid_argument("PauliOperator: illegal character in label");
        uint32_t a = uint32_t(lc) & 1u, b = (uint32_t(lc) >> 1) & 1u;
        code |= (a << (2 * i)) | (b << (2 * i + 1));
    }
    if (code == 0) throw std::invalid_argument("PauliOperator: identity label excluded");
    return PauliOperator(code, n);
}

PauliOperator PauliOperator::from_code(uint32_t code, int n) {
    if (n < 2 || 2 * n > kMaxCoords)
        throw std::invalid_argument("PauliOperator: qubit count out of range");
    if (code == 0 || (code & ~low_bits(2 * n)))
        throw std::invalid_argument("PauliOperator: code out of range");
    return PauliOperator(code, n);
}

uint32_t PauliOperator::x_bits() const {
    uint32_t a = 0;
    for (int i = 0; i < n_; ++i) a |= ((code_ >> (2 * i)) & 1u) << i;
    return a;
}

uint32_t PauliOperator::z_bits() const {
    uint32_t b = 0;
    for (int i = 0; i < n_; ++i) b |= ((code_ >> (2 * i + 1)) & 1u) << i;
    return b;
}

std::string PauliOperator::label() const {
    std::string s(size_t(n_), 'I');
    for (int i = 0; i < n_; ++i) {
        s[size_t(i)] = kLetters[(code_ >> (2 * i)) & 3u];
    }
    return s;
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
    if (p.qubits() != q.qubits())
        throw std::invalid_argument("commutes: operators on different qubit counts");
    return SymplecticForm::pair(p.code(), q.code()) == 0;
}

bool is_symmetric(const PauliOperator& p) {
    const uint32_t y_mask = p.code() & (p.code() >> 1) & detail::kEvenBits<uint32_t>;
    return (std::popcount(y_mask) & 1) == 0;
}

std::vector<PauliOperator> symmetric_set(int n) {
    if (n < 2 || n > 6) throw std::invalid_argument("symmetric_set: n must be in 2..6");
    std::vector<PauliOperator> out;
    const uint32_t ncodes = uint32_t(1) << (2 * n);
    for (uint32_t c = 1; c < ncodes; ++c) {
        PauliOperator p = PauliOperator::from_code(c, n);
        if (is_symmetric(p)) out.push_back(p);
    }
    return out;
}

std::vector<SubspaceF2> maximal_commuting_sets(int n) {
    if (n < 2 || n > 4)
        throw std::invalid_argument("maximal_commuting_sets: n must be in 2..4");
    const size_t ncodes = size_t(1) << (2 * n);
    BitVec allowed(ncodes);
    for (size_t c = 1; c < ncodes; ++c) allowed.set(c);
    return detail::maximal_orthogonal_subspaces(
        2 * n, allowed, [](uint32_t p) { return swap_pair_bits(p); });
}

}  // namespace fgeom
