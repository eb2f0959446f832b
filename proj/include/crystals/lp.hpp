#pragma once

#include <vector>

#include "crystals/laurent.hpp"

namespace crystals::trop {

using crystals::alg::Rat;

enum class LPStatus { Optimal, Unbounded, Infeasible };

struct LPResult {
  LPStatus status;
  Rat value;  // optimal objective value when status == Optimal
};

// maximize c.x subject to A x <= b, x free.
LPResult lp_max_free(const std::vector<std::vector<Rat>>& A,
                     const std::vector<Rat>& b, const std::vector<Rat>& c);

// Feasibility of { x >= 0 : Aeq x = beq }.
bool lp_feasible_eq_nonneg(const std::vector<std::vector<Rat>>& Aeq,
                           const std::vector<Rat>& beq);

}  // namespace crystals::trop
