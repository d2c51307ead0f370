#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bowtie::cli {

// Exit status contract.
inline constexpr int kAccept = 0;
inline constexpr int kReject = 1;
inline constexpr int kUsage = 2;
inline constexpr int kFalsified = 3; // checker and oracle disagree, or a construction failed

enum class OutputMode { Text, Structured, Dot, Edges };

/// Runs `check SEQ | realize SEQ | verify N | sigma N` with an optional
/// `--output {text,structured,dot,edges}`. args excludes the program name.
/// Reports go to out, diagnostics to err; returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bowtie::cli
