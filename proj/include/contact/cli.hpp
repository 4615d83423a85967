#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace contact
{

// Exit codes: 0 success or pass, 1 a check failed, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace contact
