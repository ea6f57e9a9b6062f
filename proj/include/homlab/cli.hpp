#ifndef HOMLAB_CLI_HPP
#define HOMLAB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace homlab {

// Exit codes: 0 computed/holds, 1 property fails (counterexample printed),
// 2 usage error, 3 resource/budget error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace homlab

#endif
