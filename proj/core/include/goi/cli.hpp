// Command-line front door.  Exit codes: 0 success/pass, 1 property failure
// (the report carries a witness), 2 usage or parse error.

#ifndef GOI_CLI_HPP
#define GOI_CLI_HPP

#include <iostream>
#include <string>
#include <vector>

namespace goi {

inline constexpr const char* kToolVersion = "0.1.0";

int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace goi

#endif  // GOI_CLI_HPP
