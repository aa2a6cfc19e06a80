#include "pointlike/regex.hpp"

#include <map>
#include <memory>
#include <vector>

#include "pointlike/errors.hpp"

namespace pointlike {

namespace {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

// Regexes are kept in a canonical form (flattened, sorted, deduplicated
// unions; right-associated concatenations; collapsed stars) so that the
// derivative construction reaches a fixpoint on few states.
struct Node {
  enum class Kind { empty, eps, lit, cat, alt, star };
  Kind kind;
  char c = 0;
  NodePtr left, right;
  std::vector<NodePtr> alts;
  NodePtr sub;
  std::string key;
};

NodePtr intern(std::shared_ptr<Node> n, std::string key) {
  static thread_local std::map<std::string, NodePtr> pool;
  n->key = key;
  auto [it, inserted] = pool.emplace(std::move(key), std::move(n));
  return it->second;
}

NodePtr make_empty() {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::empty;
  return intern(std::move(n), "0");
}

NodePtr make_eps() {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::eps;
  return intern(std::move(n), "1");
}

NodePtr make_lit(char c) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::lit;
  n->c = c;
  return intern(std::move(n), std::string("l") + c);
}

NodePtr make_cat(NodePtr a, NodePtr b) {
  if (a->kind == Node::Kind::empty || b->kind == Node::Kind::empty) {
    return make_empty();
  }
  if (a->kind == Node::Kind::eps) {
    return b;
  }
  if (b->kind == Node::Kind::eps) {
    return a;
  }
  if (a->kind == Node::Kind::cat) {
    return make_cat(a->left, make_cat(a->right, b));
  }
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::cat;
  n->left = a;
  n->right = b;
  return intern(std::move(n), "(c" + a->key + b->key + ")");
}

NodePtr make_alt(std::vector<NodePtr> parts) {
  std::vector<NodePtr> flat;
  for (const NodePtr& p : parts) {
    if (p->kind == Node::Kind::empty) {
      continue;
    }
    if (p->kind == Node::Kind::alt) {
      flat.insert(flat.end(), p->alts.begin(), p->alts.end());
    } else {
      flat.push_back(p);
    }
  }
  std::sort(flat.begin(), flat.end(),
            [](const NodePtr& a, const NodePtr& b) { return a->key < b->key; });
  flat.erase(std::unique(flat.begin(), flat.end(),
                         [](const NodePtr& a, const NodePtr& b) {
                           return a->key == b->key;
                         }),
             flat.end());
  if (flat.empty()) {
    return make_empty();
  }
  if (flat.size() == 1) {
    return flat.front();
  }
  std::string key = "(a";
  for (const NodePtr& p : flat) {
    key += p->key;
  }
  key += ")";
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::alt;
  n->alts = std::move(flat);
  return intern(std::move(n), std::move(key));
}

NodePtr make_star(NodePtr a) {
  if (a->kind == Node::Kind::empty || a->kind == Node::Kind::eps) {
    return make_eps();
  }
  if (a->kind == Node::Kind::star) {
    return a;
  }
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::star;
  n->sub = a;
  return intern(std::move(n), "(s" + a->key + ")");
}

bool nullable(const NodePtr& n) {
  switch (n->kind) {
    case Node::Kind::empty:
    case Node::Kind::lit:
      return false;
    case Node::Kind::eps:
    case Node::Kind::star:
      return true;
    case Node::Kind::cat:
      return nullable(n->left) && nullable(n->right);
    case Node::Kind::alt:
      for (const NodePtr& p : n->alts) {
        if (nullable(p)) {
          return true;
        }
      }
      return false;
  }
  return false;
}

NodePtr derivative(const NodePtr& n, char a) {
  switch (n->kind) {
    case Node::Kind::empty:
    case Node::Kind::eps:
      return make_empty();
    case Node::Kind::lit:
      return n->c == a ? make_eps() : make_empty();
    case Node::Kind::cat: {
      NodePtr d = make_cat(derivative(n->left, a), n->right);
      if (nullable(n->left)) {
        return make_alt({d, derivative(n->right, a)});
      }
      return d;
    }
    case Node::Kind::alt: {
      std::vector<NodePtr> parts;
      for (const NodePtr& p : n->alts) {
        parts.push_back(derivative(p, a));
      }
      return make_alt(std::move(parts));
    }
    case Node::Kind::star:
      return make_cat(derivative(n->sub, a), n);
  }
  return make_empty();
}

class Parser {
 public:
  Parser(const std::string& expr, const std::string& alphabet)
      : expr_(expr), alphabet_(alphabet) {}

  NodePtr parse() {
    NodePtr n = parse_alt();
    if (pos_ != expr_.size()) {
      throw RegexParseError("unexpected '" + std::string(1, expr_[pos_]) + "'",
                            pos_);
    }
    return n;
  }

 private:
  NodePtr parse_alt() {
    std::vector<NodePtr> parts{parse_cat()};
    while (peek() == '|') {
      ++pos_;
      parts.push_back(parse_cat());
    }
    return make_alt(std::move(parts));
  }

  NodePtr parse_cat() {
    NodePtr n = parse_rep();
    while (true) {
      const char c = peek();
      if (c == 0 || c == '|' || c == ')') {
        return n;
      }
      n = make_cat(n, parse_rep());
    }
  }

  NodePtr parse_rep() {
    NodePtr n = parse_atom();
    while (true) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        n = make_star(n);
      } else if (c == '+') {
        ++pos_;
        n = make_cat(n, make_star(n));
      } else {
        return n;
      }
    }
  }

  NodePtr parse_atom() {
    const char c = peek();
    if (c == 0) {
      throw RegexParseError("unexpected end of expression", pos_);
    }
    if (c == '(') {
      const std::size_t open = pos_++;
      NodePtr n = parse_alt();
      if (peek() != ')') {
        throw RegexParseError("unclosed '('", open);
      }
      ++pos_;
      return n;
    }
    if (c == '*' || c == '+' || c == '|' || c == ')') {
      throw RegexParseError("unexpected '" + std::string(1, c) + "'", pos_);
    }
    if (alphabet_.find(c) == std::string::npos) {
      throw RegexParseError("letter '" + std::string(1, c)
                                + "' is not in the alphabet",
                            pos_);
    }
    ++pos_;
    return make_lit(c);
  }

  char peek() const { return pos_ < expr_.size() ? expr_[pos_] : 0; }

  const std::string& expr_;
  const std::string& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Dfa regex_to_dfa(const std::string& expr, const std::string& alphabet) {
  if (alphabet.empty()) {
    throw InputError("empty alphabet");
  }
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (alphabet.find(alphabet[i], i + 1) != std::string::npos) {
      throw InputError("duplicate letter in alphabet");
    }
  }
  const NodePtr root = Parser(expr, alphabet).parse();
  if (nullable(root)) {
    throw EmptyWordAcceptedError(
        "the expression accepts the empty word; languages must be "
        "subsets of A+");
  }

  Dfa d;
  d.alphabet.assign(alphabet.begin(), alphabet.end());
  std::map<std::string, std::uint32_t> index;
  std::vector<NodePtr> states{root};
  index.emplace(root->key, 0);
  for (std::size_t next = 0; next < states.size(); ++next) {
    for (char a : alphabet) {
      NodePtr der = derivative(states[next], a);
      auto [it, inserted] =
          index.emplace(der->key, static_cast<std::uint32_t>(states.size()));
      if (inserted) {
        if (states.size() >= 10000) {
          throw CapExceededError("derivative construction exceeded 10000 "
                                 "states");
        }
        states.push_back(der);
      }
      d.delta.push_back(it->second);
    }
  }
  d.states = static_cast<std::uint32_t>(states.size());
  d.initial = 0;
  for (std::uint32_t q = 0; q < d.states; ++q) {
    if (nullable(states[q])) {
      d.finals.push_back(q);
    }
  }
  d.validate();
  return minimize(d);
}

}  // namespace pointlike
