#pragma once

namespace locolor {

// Front end for the locolor tool. Exit codes: 0 success/feasible,
// 1 verified-infeasible or violation found, 2 usage or input error,
// 3 budget exhausted.
int cli_dispatch(int argc, const char* const* argv);

}  // namespace locolor
