#pragma once

#include <iosfwd>
#include <string>

namespace plumbtop::cli {

enum class Format { Json, Dot, Text };

Format parse_format(const std::string& name); // "json" | "dot" | "text"

// Exit codes: 0 ok, 1 claim failure, 2 input error.
int cmd_germ(const std::string& input_path, bool irreducible, Format fmt,
             std::ostream& out, std::ostream& err);
int cmd_h1(const std::string& input_path, Format fmt, std::ostream& out, std::ostream& err);
int cmd_graph(const std::string& family, int l, Format fmt, std::ostream& out, std::ostream& err);
int cmd_glue(const std::string& path_a, const std::string& path_b, long alpha, long beta,
             std::size_t leg_a, std::size_t leg_b, Format fmt, std::ostream& out, std::ostream& err);
int cmd_snf(const std::string& input_path, Format fmt, std::ostream& out, std::ostream& err);
int cmd_repro(Format fmt, std::ostream& out, std::ostream& err);

} // namespace plumbtop::cli
