#include "ecg/errors.hpp"

namespace ecg {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::malformed_header: return "malformed header";
    case ParseErrorKind::malformed_body: return "malformed body";
    case ParseErrorKind::vertex_out_of_range: return "vertex index out of range";
    case ParseErrorKind::duplicate_edge: return "duplicate edge";
    case ParseErrorKind::self_loop: return "self-loop";
    case ParseErrorKind::non_symmetric_rotation: return "non-symmetric rotation data";
    case ParseErrorKind::missing_outer_face: return "missing outer face";
  }
  return "parse error";
}

namespace {

std::string parse_message(ParseErrorKind kind, const std::string& what, int line) {
  std::string msg = to_string(kind);
  if (line > 0) msg += " (line " + std::to_string(line) + ")";
  if (!what.empty()) msg += ": " + what;
  return msg;
}

template <std::size_t N>
std::string join_ids(const std::array<int, N>& ids) {
  std::string s;
  for (std::size_t i = 0; i < N; ++i) {
    if (i) s += ' ';
    s += std::to_string(ids[i]);
  }
  return s;
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, const std::string& what, int line)
    : Error(parse_message(kind, what, line)), kind_(kind), line_(line) {}

NotCograph::NotCograph(std::array<int, 4> p4)
    : Error("not a cograph: induced P4 " + join_ids(p4)), p4_(p4) {}

NotTriviallyPerfect::NotTriviallyPerfect(std::array<int, 4> witness, bool is_cycle)
    : Error(std::string("not trivially perfect: induced ") + (is_cycle ? "C4 " : "P4 ") +
            join_ids(witness)),
      witness_(witness),
      is_cycle_(is_cycle) {}

TriangleSeparatorPresent::TriangleSeparatorPresent(std::array<int, 3> triangle)
    : Error("triangle separator present: " + join_ids(triangle)), triangle_(triangle) {}

}  // namespace ecg
