#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lb/multicomplex.hpp"

namespace lb {

// Deterministic JSON text ("schema": 1) for a K or P complex.
std::string export_json(const MultiComplex& mc);
// Rebuilds the complex from export_json output; words are parsed, not regenerated.
MultiComplex import_json(const std::string& text);
// export -> import gives the same objects, words and realized matrices.
CheckResult check_roundtrip(const MultiComplex& mc, int jobs);

// Exit codes: 0 all checks pass, 1 a check failed, 2 invalid parameters or usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace lb
