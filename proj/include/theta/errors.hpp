#pragma once

#include <stdexcept>
#include <string>

namespace theta {

/// Precondition violated by a caller (bad modulus, even denominator, ...).
class invalid_argument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A matrix was passed to an operation defined only on a subgroup it is not in.
class not_a_member : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A division by 3 or 4 inside a multiplier formula left a remainder.
/// For members this is unreachable; seeing it means the branch was mis-selected.
class divisibility_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Coset lookup found zero or several matching representatives.
class partition_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace theta
