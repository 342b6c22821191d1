#include "sweepspace/tape.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace sweepspace {

namespace {

int fields_for(TapeKind kind) { return kind == TapeKind::points ? 2 : 4; }

void validate_record(TapeKind kind, const std::array<Coord, 4>& r, size_t line_no) {
  const auto fail = [&](const char* msg) {
    throw UsageError("line " + std::to_string(line_no) + ": " + msg);
  };
  if (kind == TapeKind::rectangles) {
    if (!(r[0] < r[2]) || !(r[1] < r[3])) fail("rectangle requires xlo < xhi and ylo < yhi");
  } else if (kind == TapeKind::axis_segments) {
    if (r[0] != r[2] && r[1] != r[3]) fail("segment is not axis-parallel");
  }
}

}  // namespace

InputTape parse_tape(TapeKind kind, const std::string& text) {
  std::vector<std::array<Coord, 4>> records;
  const int nf = fields_for(kind);
  size_t line_no = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::array<Coord, 4> rec{0, 0, 0, 0};
    const char* p = line.data();
    const char* end = line.data() + line.size();
    for (int f = 0; f < nf; ++f) {
      while (p < end && *p == ' ') ++p;
      long long v = 0;
      auto [next, ec] = std::from_chars(p, end, v);
      if (ec != std::errc()) {
        throw UsageError("line " + std::to_string(line_no) + ": expected integer field");
      }
      if (v < -static_cast<long long>(kCoordLimit) || v > static_cast<long long>(kCoordLimit)) {
        throw UsageError("line " + std::to_string(line_no) + ": coordinate out of range");
      }
      rec[static_cast<size_t>(f)] = static_cast<Coord>(v);
      p = next;
    }
    while (p < end && *p == ' ') ++p;
    if (p != end) {
      throw UsageError("line " + std::to_string(line_no) + ": trailing characters");
    }
    validate_record(kind, rec, line_no);
    records.push_back(rec);
  }
  return InputTape(kind, std::move(records));
}

InputTape load_tape(TapeKind kind, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_tape(kind, buf.str());
}

}  // namespace sweepspace
