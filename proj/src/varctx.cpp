#include "crystals/varctx.hpp"

namespace crystals::alg {

CtxPtr make_ctx() { return std::make_shared<VarCtx>(); }

CtxPtr make_chart_ctx(int n, int l) {
  auto ctx = std::make_shared<VarCtx>();
  for (int i = 1; i <= n; ++i) ctx->intern("t" + std::to_string(i));
  for (int k = 1; k <= l; ++k) ctx->intern("c" + std::to_string(k));
  return ctx;
}

}  // namespace crystals::alg
