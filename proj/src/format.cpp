#include "gsgp/format.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

namespace gsgp {

namespace {

struct Token {
  std::string text;
  int line;
  int col;
};

// Lines of tokens, comments stripped. Column numbers are 1-based byte offsets.
struct TokenLines {
  std::vector<std::vector<Token>> lines;
  std::vector<std::string> comments;
};

TokenLines tokenize(const std::string& text) {
  TokenLines out;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string line = text.substr(pos, eol - pos);
    ++line_no;

    size_t hash = line.find('#');
    bool full_line_comment = false;
    if (hash != std::string::npos) {
      full_line_comment = line.find_first_not_of(" \t") == hash;
      if (full_line_comment) out.comments.push_back(line.substr(hash + 1));
      line = line.substr(0, hash);
    }

    std::vector<Token> toks;
    size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      if (i > start)
        toks.push_back({line.substr(start, i - start), line_no, static_cast<int>(start + 1)});
    }
    if (!toks.empty()) out.lines.push_back(std::move(toks));

    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return out;
}

int parse_int(const Token& t, const char* what) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(t.text, &used);
  } catch (const std::exception&) {
    throw ParseError(t.line, t.col, std::string("expected integer ") + what + ", got '" +
                                        t.text + "'");
  }
  if (used != t.text.size())
    throw ParseError(t.line, t.col, std::string("expected integer ") + what + ", got '" +
                                        t.text + "'");
  return v;
}

}  // namespace

GsgpDocument parse(const std::string& text) {
  TokenLines tl = tokenize(text);
  GsgpDocument doc;
  doc.comments = tl.comments;

  size_t li = 0;
  auto need_line = [&](const char* what) -> const std::vector<Token>& {
    if (li >= tl.lines.size())
      throw ParseError(static_cast<int>(tl.lines.empty() ? 1 : tl.lines.back()[0].line + 1), 1,
                       std::string("unexpected end of input, expected ") + what);
    return tl.lines[li];
  };

  {
    const auto& l = need_line("'gsgp 1' header");
    if (l[0].text != "gsgp")
      throw ParseError(l[0].line, l[0].col, "expected 'gsgp' header, got '" + l[0].text + "'");
    if (l.size() != 2) throw ParseError(l[0].line, l[0].col, "header must be 'gsgp <version>'");
    doc.version = parse_int(l[1], "format version");
    if (doc.version != 1)
      throw ParseError(l[1].line, l[1].col,
                       "unsupported format version " + std::to_string(doc.version));
    ++li;
  }

  {
    const auto& l = need_line("'m <int> g <int>' line");
    if (l.size() != 4 || l[0].text != "m" || l[2].text != "g")
      throw ParseError(l[0].line, l[0].col, "expected 'm <int> g <int>'");
    doc.table.m = parse_int(l[1], "carrier size m");
    doc.table.g = parse_int(l[3], "operator count g");
    if (doc.table.m < 1) throw ParseError(l[1].line, l[1].col, "m must be >= 1");
    if (doc.table.g < 1) throw ParseError(l[3].line, l[3].col, "g must be >= 1");
    ++li;
  }

  const int m = doc.table.m, g = doc.table.g;

  auto read_names = [&](const char* keyword, int expected) -> std::vector<std::string> {
    std::vector<std::string> names;
    if (li < tl.lines.size() && tl.lines[li][0].text == keyword) {
      const auto& l = tl.lines[li];
      if (static_cast<int>(l.size()) - 1 != expected)
        throw ParseError(l[0].line, l[0].col,
                         std::string("'") + keyword + "' must list exactly " +
                             std::to_string(expected) + " tokens, got " +
                             std::to_string(l.size() - 1));
      for (size_t i = 1; i < l.size(); ++i) {
        for (size_t j = 1; j < i; ++j)
          if (l[j].text == l[i].text)
            throw ParseError(l[i].line, l[i].col, "duplicate name '" + l[i].text + "'");
        names.push_back(l[i].text);
      }
      ++li;
    }
    return names;
  };

  doc.table.element_names = read_names("elements", m);
  doc.table.gamma_names = read_names("gammas", g);

  std::vector<std::string> elem_names = doc.table.element_names;
  if (elem_names.empty())
    for (int i = 0; i < m; ++i) elem_names.push_back("e" + std::to_string(i));
  std::unordered_map<std::string, Elem> elem_index;
  for (int i = 0; i < m; ++i) elem_index[elem_names[i]] = i;

  bool gamma_names_declared = !doc.table.gamma_names.empty();
  std::vector<std::string> seen_gamma_names;

  doc.table.entries.assign(g * m * m, 0);
  for (int gamma = 0; gamma < g; ++gamma) {
    const auto& hl = need_line("'table <gamma>' line");
    if (hl[0].text != "table")
      throw ParseError(hl[0].line, hl[0].col, "expected 'table <gamma>', got '" + hl[0].text + "'");
    if (hl.size() != 2) throw ParseError(hl[0].line, hl[0].col, "'table' takes exactly one token");
    if (gamma_names_declared) {
      if (hl[1].text != doc.table.gamma_names[gamma])
        throw ParseError(hl[1].line, hl[1].col,
                         "tables must follow the declared gamma order; expected 'table " +
                             doc.table.gamma_names[gamma] + "'");
    } else {
      for (const auto& s : seen_gamma_names)
        if (s == hl[1].text)
          throw ParseError(hl[1].line, hl[1].col, "duplicate table for gamma '" + hl[1].text + "'");
      seen_gamma_names.push_back(hl[1].text);
    }
    ++li;

    for (Elem a = 0; a < m; ++a) {
      const auto& rl = need_line("table row");
      if (rl[0].text == "table" || rl[0].text == "elements" || rl[0].text == "gammas")
        throw ParseError(rl[0].line, rl[0].col,
                         "table for gamma '" + hl[1].text + "' has " + std::to_string(a) +
                             " rows, declared m " + std::to_string(m));
      if (static_cast<int>(rl.size()) != m)
        throw ParseError(rl[0].line, rl[0].col,
                         "row has " + std::to_string(rl.size()) + " entries, declared m " +
                             std::to_string(m));
      for (Elem b = 0; b < m; ++b) {
        auto it = elem_index.find(rl[b].text);
        if (it == elem_index.end())
          throw ParseError(rl[b].line, rl[b].col, "unknown element token '" + rl[b].text + "'");
        doc.table.at(gamma, a, b) = it->second;
      }
      ++li;
    }
  }
  if (!gamma_names_declared) doc.table.gamma_names = seen_gamma_names;

  if (li < tl.lines.size()) {
    const auto& l = tl.lines[li];
    throw ParseError(l[0].line, l[0].col,
                     "trailing content after the last table (declared m " + std::to_string(m) +
                         ", g " + std::to_string(g) + ")");
  }
  return doc;
}

std::string serialize(const GsgpDocument& doc) {
  const RawTable& t = doc.table;
  std::vector<std::string> elem_names = t.element_names;
  if (elem_names.empty())
    for (int i = 0; i < t.m; ++i) elem_names.push_back("e" + std::to_string(i));
  std::vector<std::string> gamma_names = t.gamma_names;
  if (gamma_names.empty())
    for (int i = 0; i < t.g; ++i) gamma_names.push_back("g" + std::to_string(i));

  std::ostringstream os;
  os << "gsgp " << doc.version << "\n";
  os << "m " << t.m << " g " << t.g << "\n";
  os << "elements";
  for (const auto& n : elem_names) os << " " << n;
  os << "\n";
  os << "gammas";
  for (const auto& n : gamma_names) os << " " << n;
  os << "\n";
  for (int gamma = 0; gamma < t.g; ++gamma) {
    os << "table " << gamma_names[gamma] << "\n";
    for (Elem a = 0; a < t.m; ++a) {
      for (Elem b = 0; b < t.m; ++b) {
        if (b) os << " ";
        os << elem_names[t.at(gamma, a, b)];
      }
      os << "\n";
    }
  }
  return os.str();
}

std::string serialize(const GammaSemigroup& M) { return serialize(document_for(M)); }

GsgpDocument document_for(const GammaSemigroup& M) {
  GsgpDocument doc;
  doc.table = M.raw();
  return doc;
}

GsgpDocument load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void save_file(const std::string& path, const GsgpDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << serialize(doc);
}

}  // namespace gsgp
