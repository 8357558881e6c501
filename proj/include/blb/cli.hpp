#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "blb/document.hpp"

namespace blb::cli {

// Exit codes shared by every command.
enum ExitCode : int { ok = 0, violation = 1, usage = 2 };

// Every checker applicable to the object's kind.
CheckReport check_object(const Object& object);

// Human lines, or one JSON object per check followed by a summary record.
enum class Format { human, records };
void print_report(std::ostream& out, const CheckReport& report, Format format, double elapsed_ms);

// Entry point without the program name; never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blb::cli
