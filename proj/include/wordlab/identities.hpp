#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wordlab/numeric.hpp"

namespace wordlab {

inline constexpr long kDefaultFibIndexLimit = 1000000;

// Fibonacci number at any integer index, with f_{-m} = (-1)^{m+1} f_m.
Int fib(long n, long index_limit = kDefaultFibIndexLimit);

// C(2n, n) by the multiplicative formula.
Int central_binomial(unsigned long n);

// How Fibonacci values at negative indices enter claim evaluation: the
// signed extension above, or its absolute value.
enum class FibIndexMode { Negafibonacci, AbsoluteValue };

enum class ClaimVerdict { True, False, Undefined };
const char* claim_verdict_name(ClaimVerdict v);

struct ClaimParam {
    std::string name;
    long value;
};

struct ClaimReport {
    std::string claim;
    std::vector<ClaimParam> params;
    std::optional<Rat> lhs;  // empty when the side is undefined
    std::optional<Rat> rhs;
    ClaimVerdict verdict = ClaimVerdict::Undefined;
    std::string note;
};

struct ClaimInfo {
    std::string id;
    std::vector<std::string> param_names;  // declared order
    std::string statement;
    std::string domain;
};

// The closed set of evaluable claims.
const std::vector<ClaimInfo>& claim_registry();
const ClaimInfo& claim_info(const std::string& claim_id);

ClaimReport claim_eval(const std::string& claim_id, const std::vector<long>& params,
                       FibIndexMode mode = FibIndexMode::Negafibonacci);

// One sweep bound: a constant, or an earlier parameter plus an offset.
struct RangeBound {
    std::string base;  // empty for a constant
    long offset = 0;
};

struct ParamRange {
    std::string name;
    RangeBound lo, hi;
};

struct SweepSummary {
    std::string claim;
    std::uint64_t true_count = 0;
    std::uint64_t false_count = 0;
    std::uint64_t undefined_count = 0;
    std::vector<ClaimReport> cases;  // lexicographic in declared param order
};

SweepSummary claim_sweep(const std::string& claim_id, const std::vector<ParamRange>& ranges,
                         FibIndexMode mode = FibIndexMode::Negafibonacci);

// "n=1;k=4" in declared parameter order.
std::string claim_params_string(const std::vector<ClaimParam>& params);

}  // namespace wordlab
