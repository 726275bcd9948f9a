#pragma once

#include <stdexcept>
#include <string>

namespace foliatlas {

class CalcError : public std::runtime_error {
public:
    explicit CalcError(const std::string& msg) : std::runtime_error(msg) {}
};

// Rank preconditions of the Chern calculus (sums above 3, Todd of non-rank-3, ...).
class RankError : public CalcError {
public:
    explicit RankError(const std::string& msg) : CalcError(msg) {}
};

// A cohomology-table query the catalog has no closed form for.  Distinct from
// returning 0: silent zeros would corrupt every Ext computation downstream.
class RangeNotCovered : public CalcError {
public:
    explicit RangeNotCovered(const std::string& msg) : CalcError(msg) {}
};

// A criterion whose hypotheses the given model/degree does not satisfy.
class NotApplicable : public CalcError {
public:
    explicit NotApplicable(const std::string& msg) : CalcError(msg) {}
};

// Inconsistent numeric input, or a computation that should have produced an
// integer and did not.
class DataError : public CalcError {
public:
    explicit DataError(const std::string& msg) : CalcError(msg) {}
};

} // namespace foliatlas
