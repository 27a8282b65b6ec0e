#pragma once

#include <iosfwd>

namespace treespectra::cli {

// Entry point for the tree-spectra tool. Exit codes: 0 success, 1 verification
// failure, 2 bad input or parse error, 3 non-tree input where a tree is
// required, 4 internal error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace treespectra::cli
