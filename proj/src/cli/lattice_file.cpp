#include "shellbound/cli/lattice_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "shellbound/errors.hpp"
#include "shellbound/lattice/catalog.hpp"

namespace shellbound::cli {

namespace {

using nlohmann::json;

struct Node {
  enum class Kind { null, boolean, integer, string, array, object };
  Kind kind = Kind::null;
  std::string text;
  std::vector<Node> items;
  std::vector<std::pair<std::string, Node>> members;

  const Node* find(const std::string& key) const {
    for (const auto& [k, v] : members) {
      if (k == key) return &v;
    }
    return nullptr;
  }
};

// Builds a Node tree, keeping every number as its source text.
class TreeBuilder : public nlohmann::json_sax<json> {
 public:
  bool null() override { return leaf(Node{Node::Kind::null, {}, {}, {}}); }
  bool boolean(bool v) override { return leaf(Node{Node::Kind::boolean, v ? "true" : "false", {}, {}}); }
  bool number_integer(number_integer_t v) override { return leaf(Node{Node::Kind::integer, std::to_string(v), {}, {}}); }
  bool number_unsigned(number_unsigned_t v) override {
    return leaf(Node{Node::Kind::integer, std::to_string(v), {}, {}});
  }
  bool number_float(number_float_t, const string_t& raw) override {
    // Integer literals too large for 64 bits arrive here with their text.
    static const std::regex integer_literal("-?[0-9]+");
    if (!std::regex_match(raw, integer_literal)) throw InputError("non-integer number '" + raw + "' in lattice file");
    return leaf(Node{Node::Kind::integer, raw, {}, {}});
  }
  bool string(string_t& v) override { return leaf(Node{Node::Kind::string, v, {}, {}}); }
  bool binary(binary_t&) override { throw InputError("binary values are not supported"); }
  bool start_object(std::size_t) override {
    stack_.push_back(Node{Node::Kind::object, {}, {}, {}});
    keys_.emplace_back();
    return true;
  }
  bool key(string_t& k) override {
    keys_.back() = k;
    return true;
  }
  bool end_object() override {
    Node done = std::move(stack_.back());
    stack_.pop_back();
    keys_.pop_back();
    return leaf(std::move(done));
  }
  bool start_array(std::size_t) override {
    stack_.push_back(Node{Node::Kind::array, {}, {}, {}});
    keys_.emplace_back();
    return true;
  }
  bool end_array() override { return end_object(); }
  bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) override {
    throw InputError("malformed lattice document at byte " + std::to_string(position) + ": " + ex.what());
  }

  Node take() {
    if (!root_) throw InputError("empty lattice document");
    return std::move(*root_);
  }

 private:
  bool leaf(Node node) {
    if (stack_.empty()) {
      root_ = std::move(node);
    } else if (stack_.back().kind == Node::Kind::object) {
      stack_.back().members.emplace_back(keys_.back(), std::move(node));
    } else {
      stack_.back().items.push_back(std::move(node));
    }
    return true;
  }

  std::vector<Node> stack_;
  std::vector<std::string> keys_;
  std::optional<Node> root_;
};

BigInt integer_of(const Node& node, const std::string& where) {
  static const std::regex integer_text("\\s*-?[0-9]+\\s*");
  if (node.kind == Node::Kind::integer || (node.kind == Node::Kind::string && std::regex_match(node.text, integer_text))) {
    std::string digits = node.text;
    digits.erase(std::remove_if(digits.begin(), digits.end(), [](unsigned char ch) { return std::isspace(ch); }),
                 digits.end());
    return BigInt(digits);
  }
  throw InputError(where + " is not an integer");
}

}  // namespace

GramLattice parse_lattice_document(std::string_view text) {
  TreeBuilder builder;
  json::sax_parse(text.begin(), text.end(), &builder);
  const Node root = builder.take();
  if (root.kind != Node::Kind::object) throw InputError("lattice document must be an object");

  std::string name;
  if (const Node* n = root.find("name")) {
    if (n->kind != Node::Kind::string) throw InputError("'name' must be a string");
    name = n->text;
  }
  const Node* dim_node = root.find("dim");
  const Node* gram_node = root.find("gram");
  if (!dim_node) throw InputError("lattice document lacks 'dim'");
  if (!gram_node) throw InputError("lattice document lacks 'gram'");
  const BigInt dim = integer_of(*dim_node, "'dim'");
  if (dim < 1 || dim > 100000) throw InputError("'dim' out of range");
  const auto n = static_cast<std::size_t>(dim.get_ui());
  if (gram_node->kind != Node::Kind::array || gram_node->items.size() != n) {
    throw InputError("'gram' must be an array of " + std::to_string(n) + " rows");
  }
  IntMatrix gram;
  gram.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Node& row = gram_node->items[i];
    if (row.kind != Node::Kind::array || row.items.size() != n) {
      throw InputError("gram row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    }
    std::vector<BigInt> r;
    r.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
      r.push_back(integer_of(row.items[j], "gram[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
    }
    gram.push_back(std::move(r));
  }
  return GramLattice(std::move(gram), std::move(name));
}

std::string write_lattice_document(const GramLattice& lattice) {
  std::ostringstream os;
  os << "{\n  \"name\": " << json(lattice.name()).dump() << ",\n  \"dim\": " << lattice.dim() << ",\n  \"gram\": [\n";
  for (int i = 0; i < lattice.dim(); ++i) {
    os << "    [";
    for (int j = 0; j < lattice.dim(); ++j) os << (j ? ", " : "") << lattice.entry(i, j).get_str();
    os << "]" << (i + 1 < lattice.dim() ? "," : "") << "\n";
  }
  os << "  ]\n}\n";
  return os.str();
}

GramLattice load_lattice_source(const std::string& source) {
  if (source.empty()) throw InputError("empty lattice source");
  if (source.front() != '@') return builtin(source);
  const std::string path = source.substr(1);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open lattice file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lattice_document(buf.str());
}

}  // namespace shellbound::cli
