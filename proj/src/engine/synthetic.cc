#include "weft/engine/synthetic.h"

#include <random>
#include <vector>

namespace weft {

namespace {

constexpr const char* kWords[] = {"lorem", "ipsum", "dolor", "sit", "amet", "flow", "block",
                                  "inline", "layout", "style", "glyph", "paint", "servo", "tree"};

}  // namespace

std::string synthetic_page(const SyntheticPageOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::size_t n = options.elements;
  std::size_t branching = options.branching == 0 ? 1 : options.branching;
  // parents[i] for element i (0 is the top-level div under body).
  std::vector<std::vector<std::size_t>> children(n);
  if (options.random_shape) {
    std::size_t next = 1;
    for (std::size_t i = 0; i < n && next < n; ++i) {
      std::size_t fan = std::uniform_int_distribution<std::size_t>(1, branching)(rng);
      for (std::size_t k = 0; k < fan && next < n; ++k) children[i].push_back(next++);
    }
  } else {
    for (std::size_t i = 1; i < n; ++i) children[(i - 1) / branching].push_back(i);
  }

  auto words = [&](std::size_t count) {
    std::string out;
    for (std::size_t k = 0; k < count; ++k) {
      if (k > 0) out += ' ';
      out += kWords[std::uniform_int_distribution<std::size_t>(0, std::size(kWords) - 1)(rng)];
    }
    return out;
  };

  std::string html = "<!DOCTYPE html>\n<html><head><title>synthetic</title></head><body>\n";
  // Iterative pre-order emission.
  struct Frame {
    std::size_t node;
    std::size_t next_child;
  };
  std::vector<Frame> stack;
  if (n > 0) stack.push_back({0, 0});
  auto open = [&](std::size_t i) {
    html += "<div class=\"c" + std::to_string(i % 7) + "\"";
    if (i % 97 == 0) html += " id=\"n" + std::to_string(i) + "\"";
    html += ">";
    if (children[i].empty()) {
      switch (i % 5) {
        case 0: html += words(3) + " <span class=\"em\">" + words(2) + "</span>"; break;
        case 1: html += "<ul><li>" + words(2) + "</li></ul>"; break;
        default: html += words(1 + i % 4); break;
      }
    } else if (i % 3 == 0) {
      html += words(2);
    }
  };
  open(0);
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next_child < children[top.node].size()) {
      std::size_t child = children[top.node][top.next_child++];
      open(child);
      stack.push_back({child, 0});
    } else {
      html += "</div>";
      if (stack.size() <= 2) html += "\n";
      stack.pop_back();
    }
  }
  html += "</body></html>\n";
  return html;
}

std::string synthetic_stylesheet() {
  return "body { margin: 8px; }\n"
         "div { padding: 1px 2px; }\n"
         ".c1 { margin-left: 4px; background-color: #eeeeee; }\n"
         ".c2 > div { color: navy; }\n"
         "div .c3 { font-size: 1.25em; }\n"
         ".c4 { width: 300px; }\n"
         ".c5 .em { color: maroon; }\n"
         "#n0 { background-color: #f0f8ff; }\n"
         "li { margin-left: 12px; }\n";
}

}  // namespace weft
