#include "support/selector_oracle.h"

#include <algorithm>
#include <sstream>
#include <vector>

namespace weft::testing {

namespace {

const char* const kTags[] = {"div", "p", "span", "a"};
const char* const kClasses[] = {"x", "y", "z"};
const char* const kIds[] = {"i0", "i1"};

template <typename T, std::size_t N>
const T& pick(std::mt19937_64& rng, const T (&items)[N]) {
  return items[std::uniform_int_distribution<std::size_t>(0, N - 1)(rng)];
}

bool chance(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

struct Compound {
  std::string type;  // empty is universal
  std::vector<std::string> classes;
  std::string id;
};

// Parses the generator's own output format only.
void parse(const std::string& text, std::vector<Compound>& compounds, std::vector<bool>& child_links) {
  std::istringstream in(text);
  std::string word;
  bool next_child = false;
  while (in >> word) {
    if (word == ">") {
      next_child = true;
      continue;
    }
    if (!compounds.empty()) child_links.push_back(next_child);
    next_child = false;
    Compound c;
    std::size_t i = 0;
    while (i < word.size() && word[i] != '.' && word[i] != '#') c.type.push_back(word[i++]);
    if (c.type == "*") c.type.clear();
    while (i < word.size()) {
      char kind = word[i++];
      std::string name;
      while (i < word.size() && word[i] != '.' && word[i] != '#') name.push_back(word[i++]);
      if (kind == '.') {
        c.classes.push_back(name);
      } else {
        c.id = name;
      }
    }
    compounds.push_back(c);
  }
}

bool compound_ok(const Compound& c, const ElementData& e) {
  if (!c.type.empty() && c.type != e.name) return false;
  std::string class_attr;
  std::string id_attr;
  bool has_id = false;
  for (const Attribute& a : e.attributes) {
    if (a.name == "class") class_attr = a.value;
    if (a.name == "id") {
      id_attr = a.value;
      has_id = true;
    }
  }
  if (!c.id.empty() && (!has_id || id_attr != c.id)) return false;
  std::istringstream in(class_attr);
  std::vector<std::string> have;
  for (std::string w; in >> w;) have.push_back(w);
  for (const std::string& cls : c.classes) {
    if (std::find(have.begin(), have.end(), cls) == have.end()) return false;
  }
  return true;
}

}  // namespace

DomTree random_element_tree(std::mt19937_64& rng, std::size_t elements) {
  DomTree tree;
  std::vector<NodeId> nodes;
  nodes.push_back(tree.append_child(tree.root(), ElementData{"html", {}}));
  for (std::size_t i = 1; i < elements; ++i) {
    NodeId parent = nodes[std::uniform_int_distribution<std::size_t>(0, nodes.size() - 1)(rng)];
    ElementData e{pick(rng, kTags), {}};
    std::string classes;
    for (const char* cls : kClasses) {
      if (chance(rng, 0.35)) classes += (classes.empty() ? "" : " ") + std::string(cls);
    }
    if (!classes.empty()) e.attributes.push_back({"class", classes});
    if (chance(rng, 0.1)) e.attributes.push_back({"id", pick(rng, kIds)});
    nodes.push_back(tree.append_child(parent, std::move(e)));
  }
  return tree;
}

std::string random_selector_text(std::mt19937_64& rng) {
  int count = std::uniform_int_distribution<int>(1, 3)(rng);
  std::string out;
  for (int i = 0; i < count; ++i) {
    if (i > 0) out += chance(rng, 0.4) ? " > " : " ";
    std::string compound;
    if (chance(rng, 0.6)) compound += pick(rng, kTags);
    int classes = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int k = 0; k < classes; ++k) compound += std::string(".") + pick(rng, kClasses);
    if (chance(rng, 0.1)) compound += std::string("#") + pick(rng, kIds);
    out += compound.empty() ? "*" : compound;
  }
  return out;
}

bool oracle_matches(const std::string& selector_text, NodeId node, const DomTree& tree) {
  std::vector<Compound> compounds;
  std::vector<bool> child_links;
  parse(selector_text, compounds, child_links);

  // chain[0] is the node, then its element ancestors outward.
  std::vector<const ElementData*> chain;
  for (std::optional<NodeId> at = node; at; at = tree.node(*at).parent) {
    if (const ElementData* e = tree.element(*at)) chain.push_back(e);
  }
  std::size_t k = compounds.size();
  if (k > chain.size()) return false;

  // positions[j] is the chain index assigned to compounds[k - 1 - j].
  std::vector<std::size_t> positions(k);
  for (std::size_t j = 0; j < k; ++j) positions[j] = j;
  while (true) {
    bool ok = positions[0] == 0;
    for (std::size_t j = 0; ok && j < k; ++j) {
      const Compound& c = compounds[k - 1 - j];
      if (!compound_ok(c, *chain[positions[j]])) ok = false;
      if (ok && j + 1 < k && child_links[k - 2 - j] && positions[j + 1] != positions[j] + 1) ok = false;
    }
    if (ok) return true;
    // Next strictly increasing tuple over [0, chain.size()).
    std::size_t j = k;
    while (j > 0 && positions[j - 1] == chain.size() - (k - j) - 1) --j;
    if (j == 0) return false;
    ++positions[j - 1];
    for (std::size_t m = j; m < k; ++m) positions[m] = positions[m - 1] + 1;
  }
}

}  // namespace weft::testing
