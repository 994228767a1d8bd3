#include "epu/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "epu/errors.hpp"

namespace epu {

std::string format_double(double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, p);
}

int csv_table::column(const std::string& name) const {
  for (size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return static_cast<int>(i);
  return -1;
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  cells.push_back(std::move(cur));
  return cells;
}

}  // namespace

csv_table read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open CSV file '" + path + "'");
  csv_table t;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() && in.eof()) break;
    auto cells = split_line(line);
    if (lineno == 1) {
      t.header = std::move(cells);
    } else {
      if (cells.size() != t.header.size())
        throw data_error(path + ":" + std::to_string(lineno) +
                         ": expected " + std::to_string(t.header.size()) +
                         " cells, got " + std::to_string(cells.size()));
      t.rows.push_back(std::move(cells));
    }
  }
  if (t.header.empty()) throw data_error("empty CSV file '" + path + "'");
  return t;
}

struct csv_writer::impl {
  std::ofstream out;
};

csv_writer::csv_writer(const std::string& path) : impl_(new impl) {
  impl_->out.open(path, std::ios::binary);  // binary: no \r\n translation
  if (!impl_->out) {
    delete impl_;
    throw data_error("cannot open '" + path + "' for writing");
  }
}

csv_writer::~csv_writer() { delete impl_; }

void csv_writer::row(const std::vector<std::string>& cells) {
  std::string line;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  line += '\n';
  impl_->out << line;
}

void csv_writer::close() {
  impl_->out.close();
  if (impl_->out.fail()) throw data_error("failed writing CSV output");
}

}  // namespace epu
