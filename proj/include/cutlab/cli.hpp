#pragma once

#include <string>
#include <vector>

namespace cutlab {

/// Entry point behind the cutlab binary. Subcommands: certify, lemma, h2,
/// sawtooth, derivative, all. Exit codes: 0 all asserted bounds pass,
/// 1 assertion failure (failing-case digests on stderr), 2 bad configuration.
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, char** argv);

}  // namespace cutlab
