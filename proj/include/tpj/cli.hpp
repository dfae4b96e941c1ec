#ifndef TPJ_CLI_HPP
#define TPJ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tpj {

// Command dispatcher behind the `treeproj` binary. Exit codes: 0 yes/success,
// 1 no/none, 2 usage or parse error, 3 verification failure.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tpj

#endif
