#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace dynemb::cli {

// Runs the command-line front end. args[0] is the program name. Returns the
// process exit code; diagnostics go to err.
//
// Subcommands: ingest, synth, embed, evaluate, sweep-dim.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dynemb::cli
