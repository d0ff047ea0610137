#ifndef UNROLLSEM_CLI_HPP
#define UNROLLSEM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace unrollsem {

// Exit codes: 0 success/pass, 1 findings (failed law, loop-route mismatch),
// 2 usage or parse errors, 3 resource-cap errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unrollsem

#endif
