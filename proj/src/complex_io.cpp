#include "srball/complex_io.hpp"

#include <fstream>
#include <sstream>

namespace srball {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw Error("");
    return v;
  } catch (const std::exception&) {
    throw Error("malformed " + what + ": '" + s + "'");
  }
}

}  // namespace

void write_complex(std::ostream& out, const SimplicialComplex& complex,
                   const std::vector<std::size_t>* order,
                   const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "n=" << complex.vertex_count() << '\n';
  const auto& labels = complex.universe().labels;
  if (!labels.empty()) {
    out << "labels=";
    for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? "," : "") << labels[i];
    out << '\n';
  }
  if (order) {
    out << "order=";
    for (std::size_t i = 0; i < order->size(); ++i) out << (i ? "," : "") << (*order)[i];
    out << '\n';
  }
  for (Face f : complex.facets()) {
    if (f.empty()) {
      out << "{}\n";
      continue;
    }
    bool first = true;
    f.for_each([&](int v) {
      out << (first ? "" : " ") << v;
      first = false;
    });
    out << '\n';
  }
}

std::string complex_to_string(const SimplicialComplex& complex,
                              const std::vector<std::size_t>* order) {
  std::ostringstream os;
  write_complex(os, complex, order);
  return os.str();
}

ComplexFile read_complex(std::istream& in) {
  std::optional<int> n;
  std::vector<std::string> labels;
  std::optional<std::vector<std::size_t>> listed_order;
  std::vector<Face> listed;
  std::vector<std::string> comments;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      comments.push_back(trim(line.substr(1)));
      continue;
    }
    if (line.rfind("n=", 0) == 0) {
      n = parse_int(line.substr(2), "vertex count");
      continue;
    }
    if (line.rfind("labels=", 0) == 0) {
      labels = split(line.substr(7), ',');
      continue;
    }
    if (line.rfind("order=", 0) == 0) {
      std::vector<std::size_t> ord;
      for (const auto& tok : split(line.substr(6), ','))
        ord.push_back(static_cast<std::size_t>(parse_int(tok, "order entry")));
      listed_order = std::move(ord);
      continue;
    }
    if (!n) throw Error("line " + std::to_string(lineno) + ": facet before n=<int> header");
    Face f;
    if (line != "{}") {
      std::istringstream is(line);
      std::string tok;
      while (is >> tok) {
        const int v = parse_int(tok, "vertex index");
        if (v < 0 || v >= *n) throw Error("vertex out of range");
        f.insert(v);
      }
    }
    listed.push_back(f);
  }
  if (!n) throw Error("missing n=<int> header");

  ComplexFile out;
  out.complex = build_complex(listed, VertexUniverse{*n, std::move(labels)});
  out.comments = std::move(comments);
  std::vector<bool> seen(out.complex.facet_count(), false);
  for (Face f : listed) {
    auto pos = out.complex.facet_index(f);
    if (pos && !seen[*pos]) {
      seen[*pos] = true;
      out.listing.push_back(*pos);
    }
  }
  if (listed_order) {
    std::vector<std::size_t> ord;
    for (std::size_t idx : *listed_order) {
      if (idx >= listed.size()) throw Error("order entry out of range");
      auto pos = out.complex.facet_index(listed[idx]);
      if (!pos) throw Error("order refers to a non-maximal face");
      ord.push_back(*pos);
    }
    out.order = std::move(ord);
  }
  return out;
}

ComplexFile read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_complex(in);
}

}  // namespace srball
