#pragma once

/// Supplier of the driving elements Q_N, defined for integer N >= -1.
/// The index -1 exists because the very first S-variable, S_1, already
/// reaches back to Q_{-1}.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "strobe/su2.hpp"

namespace strobe {

class QSequence {
public:
    static QSequence constant(const GroupElement& q) {
        return QSequence(Kind::Constant, {q});
    }

    // Q_N = even_elem for even N, odd_elem for odd N (N = -1 is odd).
    static QSequence alternating(const GroupElement& even_elem, const GroupElement& odd_elem) {
        return QSequence(Kind::Alternating, {even_elem, odd_elem});
    }

    // Elements for indices first_index, first_index+1, ...; first_index is
    // -1 or 0.  When the list starts at 0, Q_{-1} defaults to Q_0 (for a
    // constant list this reproduces P = Q^-1 R_1 Q R_0).
    static QSequence explicit_list(std::vector<GroupElement> elems, int first_index = 0) {
        if (first_index != -1 && first_index != 0) {
            throw std::invalid_argument("QSequence: first_index must be -1 or 0");
        }
        if (elems.empty()) {
            throw std::invalid_argument("QSequence: explicit list must be non-empty");
        }
        if (first_index == 0) {
            elems.insert(elems.begin(), elems.front());  // Q_{-1} := Q_0
        }
        return QSequence(Kind::Explicit, std::move(elems));
    }

    GroupElement at(std::int64_t n) const {
        if (n < -1) {
            throw std::out_of_range("QSequence: index " + std::to_string(n) + " < -1");
        }
        switch (kind_) {
            case Kind::Constant:
                return elems_[0];
            case Kind::Alternating:
                return elems_[((n % 2) + 2) % 2];
            case Kind::Explicit: {
                const std::int64_t pos = n + 1;  // elems_[0] is Q_{-1}
                if (pos >= static_cast<std::int64_t>(elems_.size())) {
                    throw std::out_of_range("QSequence: index " + std::to_string(n) +
                                            " beyond explicit list (max " +
                                            std::to_string(static_cast<std::int64_t>(elems_.size()) - 2) +
                                            ")");
                }
                return elems_[static_cast<std::size_t>(pos)];
            }
        }
        throw std::logic_error("QSequence: unreachable");
    }

private:
    enum class Kind { Constant, Alternating, Explicit };

    QSequence(Kind kind, std::vector<GroupElement> elems) : kind_(kind), elems_(std::move(elems)) {}

    Kind kind_;
    std::vector<GroupElement> elems_;
};

}  // namespace strobe
