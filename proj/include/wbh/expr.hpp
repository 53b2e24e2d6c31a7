#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wbh/antipode.hpp"

namespace wbh {

// Grammar (⊗ binds tighter than ∘; f ∘ g applies g first):
//   expr   := tensor ( ('∘' | 'o') tensor )*
//   tensor := atom ( ('⊗' | 'x') atom )*
//   atom   := NAME | 'id' [ '^' INT ] | '(' expr ')'
// 'o' and 'x' are operators only as standalone words.
struct MapExpr {
  enum class Kind { name, identity, compose, tensor } kind = Kind::name;
  std::string name;
  std::size_t power = 0;
  std::size_t pos = 0;
  std::vector<std::unique_ptr<MapExpr>> args;  // compose: in written order (outermost first)
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  std::unique_ptr<MapExpr> parse() {
    auto e = expr();
    skip();
    if (i_ != s_.size()) throw SyntaxError("unexpected '" + std::string(1, s_[i_]) + "'", i_);
    return e;
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

  // Peeks at a word without consuming it.
  std::string_view word() const {
    std::size_t j = i_;
    if (j < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
      while (j < s_.size() && ident_char(s_[j])) ++j;
    return s_.substr(i_, j - i_);
  }

  bool op(std::string_view utf8, std::string_view ascii) {
    skip();
    if (s_.substr(i_, utf8.size()) == utf8) { i_ += utf8.size(); return true; }
    if (word() == ascii) { i_ += ascii.size(); return true; }
    return false;
  }

  std::unique_ptr<MapExpr> expr() {
    auto first = tensor();
    if (!peek_op("\xE2\x88\x98", "o")) return first;
    auto node = std::make_unique<MapExpr>();
    node->kind = MapExpr::Kind::compose;
    node->pos = first->pos;
    node->args.push_back(std::move(first));
    while (op("\xE2\x88\x98", "o")) node->args.push_back(tensor());
    return node;
  }

  bool peek_op(std::string_view utf8, std::string_view ascii) {
    skip();
    return s_.substr(i_, utf8.size()) == utf8 || word() == ascii;
  }

  std::unique_ptr<MapExpr> tensor() {
    auto first = atom();
    if (!peek_op("\xE2\x8A\x97", "x")) return first;
    auto node = std::make_unique<MapExpr>();
    node->kind = MapExpr::Kind::tensor;
    node->pos = first->pos;
    node->args.push_back(std::move(first));
    while (op("\xE2\x8A\x97", "x")) node->args.push_back(atom());
    return node;
  }

  std::unique_ptr<MapExpr> atom() {
    skip();
    const std::size_t at = i_;
    if (i_ == s_.size()) throw SyntaxError("unexpected end of expression", i_);
    if (s_[i_] == '(') {
      ++i_;
      auto e = expr();
      skip();
      if (i_ == s_.size() || s_[i_] != ')') throw SyntaxError("expected ')'", i_);
      ++i_;
      return e;
    }
    auto w = word();
    if (w.empty() || w == "o" || w == "x") throw SyntaxError("expected a map name", at);
    i_ += w.size();
    auto node = std::make_unique<MapExpr>();
    node->pos = at;
    if (w == "id") {
      node->kind = MapExpr::Kind::identity;
      node->power = 1;
      skip();
      if (i_ < s_.size() && s_[i_] == '^') {
        ++i_;
        skip();
        std::size_t j = i_;
        while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
        if (j == i_) throw SyntaxError("expected an integer after '^'", i_);
        node->power = std::stoul(std::string(s_.substr(i_, j - i_)));
        i_ = j;
      }
    } else {
      node->kind = MapExpr::Kind::name;
      node->name = std::string(w);
    }
    return node;
  }
};

template <class T>
BasicTensorMap<T> eval_expr(const MapExpr& e, const std::map<std::string, BasicTensorMap<T>>& env, std::size_t n) {
  switch (e.kind) {
    case MapExpr::Kind::name: {
      auto it = env.find(e.name);
      if (it == env.end()) throw SyntaxError("unknown map '" + e.name + "'", e.pos);
      return it->second;
    }
    case MapExpr::Kind::identity:
      return BasicTensorMap<T>::identity(power(n, e.power));
    case MapExpr::Kind::tensor: {
      auto acc = eval_expr(*e.args[0], env, n);
      for (std::size_t k = 1; k < e.args.size(); ++k) acc = wbh::tensor(acc, eval_expr(*e.args[k], env, n));
      return acc;
    }
    case MapExpr::Kind::compose: {
      // written f ∘ g ∘ h, applied h first
      std::vector<BasicTensorMap<T>> chain;
      for (auto k = e.args.size(); k-- > 0;) chain.push_back(eval_expr(*e.args[k], env, n));
      for (std::size_t k = 1; k < chain.size(); ++k)
        if (chain[k - 1].codomain() != chain[k].domain())
          throw ArityMismatch("cannot compose at position " + std::to_string(e.args[e.args.size() - k - 1]->pos) +
                              ": map with domain " + to_string(chain[k].domain()) + " after map with codomain " +
                              to_string(chain[k - 1].codomain()));
      return compose(chain);
    }
  }
  throw SyntaxError("bad expression", e.pos);
}

}  // namespace detail

inline std::unique_ptr<MapExpr> parse_map_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

// n is the dimension of H, used for id^k.
template <class T>
BasicTensorMap<T> parse_expr(std::string_view text, const std::map<std::string, BasicTensorMap<T>>& env,
                             std::size_t n) {
  return detail::eval_expr(*parse_map_expr(text), env, n);
}

template <class T>
std::map<std::string, BasicTensorMap<T>> standard_env(const BasicWeakBraidedBimonad<T>& B,
                                                      const BasicEntwiningMaps<T>& E,
                                                      const std::optional<BasicTensorMap<T>>& S = std::nullopt) {
  std::map<std::string, BasicTensorMap<T>> env{
      {"m", B.m()},           {"e", B.e()},
      {"delta", B.delta()},   {"eps", B.eps()},
      {"tau", B.tau()},       {"tau_prime", B.tau_prime()},
      {"nabla", B.nabla()},   {"omega", E.omega},
      {"omegab", E.omega_bar}, {"sigma", E.sigma},
      {"sigmab", E.sigma_bar}, {"xi", E.xi},
      {"xib", E.xi_bar},      {"chi", E.chi},
      {"chib", E.chi_bar},    {"kappa", E.kappa},
      {"kappa_prime", E.kappa_prime},
  };
  if (S) env.emplace("S", *S);
  return env;
}

}  // namespace wbh
