#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regans/alphabet.hpp"
#include "regans/error.hpp"
#include "regans/regex.hpp"

namespace regans {

using StateId = int;
inline constexpr StateId kNoState = -1;

/// Epsilon-free nondeterministic automaton over symbol indices.
struct Nfa {
  std::size_t num_states = 0;
  std::size_t num_symbols = 0;
  /// transitions[state][symbol] = sorted target states.
  std::vector<std::vector<std::vector<StateId>>> transitions;
  std::vector<StateId> initial;
  std::vector<bool> accepting;

  Nfa() = default;
  Nfa(std::size_t states, std::size_t symbols)
      : num_states(states),
        num_symbols(symbols),
        transitions(states, std::vector<std::vector<StateId>>(symbols)),
        accepting(states, false) {}

  /// Standard subset simulation.
  bool accepts_indices(const std::vector<int>& word) const {
    std::vector<bool> current(num_states, false);
    for (StateId q : initial) current[q] = true;
    for (int sym : word) {
      std::vector<bool> next(num_states, false);
      for (std::size_t q = 0; q < num_states; ++q) {
        if (!current[q]) continue;
        for (StateId t : transitions[q][sym]) next[t] = true;
      }
      current = std::move(next);
    }
    for (std::size_t q = 0; q < num_states; ++q) {
      if (current[q] && accepting[q]) return true;
    }
    return false;
  }
};

/// Deterministic automaton with a partial transition map. A missing
/// transition means the run dies. The empty language is the 0-state
/// automaton with `initial == kNoState`.
class Dfa {
 public:
  explicit Dfa(OrderedAlphabet alphabet, std::size_t num_states = 0)
      : alphabet_(std::move(alphabet)),
        delta_(num_states * alphabet_.size(), kNoState),
        accepting_(num_states, false) {}

  const OrderedAlphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return accepting_.size(); }
  std::size_t num_symbols() const noexcept { return alphabet_.size(); }

  StateId initial() const noexcept { return initial_; }
  void set_initial(StateId q) {
    check_state(q);
    initial_ = q;
    trim_ = false;
  }

  bool is_accepting(StateId q) const { return accepting_.at(q); }
  void set_accepting(StateId q, bool value = true) {
    check_state(q);
    accepting_[q] = value;
    trim_ = false;
  }

  StateId next(StateId q, int symbol) const {
    return delta_[static_cast<std::size_t>(q) * num_symbols() + symbol];
  }
  void set_transition(StateId from, int symbol, StateId to) {
    check_state(from);
    if (to != kNoState) check_state(to);
    if (symbol < 0 || static_cast<std::size_t>(symbol) >= num_symbols()) {
      throw AutomatonError("symbol index out of range");
    }
    delta_[static_cast<std::size_t>(from) * num_symbols() + symbol] = to;
    trim_ = false;
  }

  StateId add_state() {
    delta_.resize(delta_.size() + num_symbols(), kNoState);
    accepting_.push_back(false);
    trim_ = false;
    return static_cast<StateId>(num_states() - 1);
  }

  /// True once the automaton went through trim(); cleared by any mutation.
  bool is_trim() const noexcept { return trim_; }
  bool is_empty_language() const noexcept { return initial_ == kNoState; }

  /// Runs the automaton on symbol indices; kNoState when the run dies.
  StateId run(const std::vector<int>& word) const {
    StateId q = initial_;
    for (int sym : word) {
      if (q == kNoState) break;
      q = next(q, sym);
    }
    return q;
  }

  bool accepts(std::string_view word) const {
    StateId q = run(alphabet_.indices(word));
    return q != kNoState && accepting_[q];
  }

  bool operator==(const Dfa& other) const {
    return alphabet_ == other.alphabet_ && initial_ == other.initial_ &&
           delta_ == other.delta_ && accepting_ == other.accepting_;
  }

 private:
  friend Dfa trim(const Dfa& dfa);

  void check_state(StateId q) const {
    if (q < 0 || static_cast<std::size_t>(q) >= num_states()) {
      throw AutomatonError("state id " + std::to_string(q) + " out of range");
    }
  }

  OrderedAlphabet alphabet_;
  std::vector<StateId> delta_;
  std::vector<bool> accepting_;
  StateId initial_ = kNoState;
  bool trim_ = false;
};

namespace detail {

// Glushkov position automaton: one state per symbol occurrence plus an
// initial state, no epsilon transitions.
class PositionAutomaton {
 public:
  explicit PositionAutomaton(const OrderedAlphabet& alphabet) : alphabet_(alphabet) {}

  Nfa build(const RegexNode& root) {
    Info info = visit(root);
    const std::size_t n = positions_.size() + 1;
    Nfa nfa(n, alphabet_.size());
    nfa.initial = {0};
    auto link = [&](StateId from, const std::vector<int>& targets) {
      for (int p : targets) {
        for (Symbol s : positions_[p]) {
          nfa.transitions[from][alphabet_.index_of(s)].push_back(p + 1);
        }
      }
    };
    link(0, info.first);
    for (std::size_t p = 0; p < positions_.size(); ++p) {
      link(static_cast<StateId>(p + 1), follow_[p]);
    }
    for (auto& row : nfa.transitions) {
      for (auto& targets : row) {
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
      }
    }
    nfa.accepting[0] = info.nullable;
    for (int p : info.last) nfa.accepting[p + 1] = true;
    return nfa;
  }

 private:
  struct Info {
    bool nullable = true;
    std::vector<int> first;
    std::vector<int> last;
  };

  static void append(std::vector<int>& dst, const std::vector<int>& src) {
    dst.insert(dst.end(), src.begin(), src.end());
  }

  void add_follow(const std::vector<int>& from, const std::vector<int>& to) {
    for (int p : from) append(follow_[p], to);
  }

  Info visit(const RegexNode& node) {
    using Kind = RegexNode::Kind;
    switch (node.kind) {
      case Kind::Empty:
        return {};
      case Kind::Literal:
      case Kind::Class: {
        const int p = static_cast<int>(positions_.size());
        positions_.push_back(node.symbols);
        follow_.emplace_back();
        return {false, {p}, {p}};
      }
      case Kind::Concat: {
        Info acc;
        for (const RegexNode& child : node.children) {
          Info next = visit(child);
          add_follow(acc.last, next.first);
          if (acc.nullable) append(acc.first, next.first);
          if (next.nullable) {
            append(acc.last, next.last);
          } else {
            acc.last = std::move(next.last);
          }
          acc.nullable = acc.nullable && next.nullable;
        }
        return acc;
      }
      case Kind::Union: {
        Info acc{false, {}, {}};
        for (const RegexNode& child : node.children) {
          Info next = visit(child);
          acc.nullable = acc.nullable || next.nullable;
          append(acc.first, next.first);
          append(acc.last, next.last);
        }
        return acc;
      }
      case Kind::Star:
      case Kind::Plus:
      case Kind::Optional: {
        Info inner = visit(node.children.front());
        if (node.kind != Kind::Optional) add_follow(inner.last, inner.first);
        if (node.kind != Kind::Plus) inner.nullable = true;
        return inner;
      }
    }
    return {};
  }

  const OrderedAlphabet& alphabet_;
  std::vector<std::vector<Symbol>> positions_;
  std::vector<std::vector<int>> follow_;
};

// Breadth-first renumbering from the initial state, exploring symbols in
// alphabet order. Drops states unreachable from the initial state.
inline Dfa canonical_order(const Dfa& dfa) {
  Dfa out(dfa.alphabet());
  if (dfa.is_empty_language()) return out;
  std::vector<StateId> renumber(dfa.num_states(), kNoState);
  std::vector<StateId> order{dfa.initial()};
  renumber[dfa.initial()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t s = 0; s < dfa.num_symbols(); ++s) {
      StateId t = dfa.next(order[i], static_cast<int>(s));
      if (t != kNoState && renumber[t] == kNoState) {
        renumber[t] = static_cast<StateId>(order.size());
        order.push_back(t);
      }
    }
  }
  for (std::size_t i = 0; i < order.size(); ++i) out.add_state();
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto q = static_cast<StateId>(i);
    out.set_accepting(q, dfa.is_accepting(order[i]));
    for (std::size_t s = 0; s < dfa.num_symbols(); ++s) {
      StateId t = dfa.next(order[i], static_cast<int>(s));
      if (t != kNoState) out.set_transition(q, static_cast<int>(s), renumber[t]);
    }
  }
  out.set_initial(0);
  return out;
}

}  // namespace detail

/// Position (Glushkov) automaton of a regular expression.
inline Nfa to_nfa(const RegexAst& ast, const OrderedAlphabet& alphabet) {
  return detail::PositionAutomaton(alphabet).build(ast);
}

/// Subset construction. Only the reachable part is built and the empty
/// subset is left implicit, so the result has a partial transition map.
inline Dfa determinize(const Nfa& nfa, const OrderedAlphabet& alphabet) {
  if (nfa.num_symbols != alphabet.size()) {
    throw AutomatonError("NFA symbol count does not match alphabet");
  }
  Dfa dfa(alphabet);
  std::vector<StateId> start = nfa.initial;
  std::sort(start.begin(), start.end());
  start.erase(std::unique(start.begin(), start.end()), start.end());
  if (start.empty()) return dfa;

  std::map<std::vector<StateId>, StateId> ids;
  std::deque<std::vector<StateId>> work;
  auto intern = [&](std::vector<StateId> subset) {
    auto [it, inserted] = ids.emplace(subset, static_cast<StateId>(dfa.num_states()));
    if (inserted) {
      StateId q = dfa.add_state();
      for (StateId s : subset) {
        if (nfa.accepting[s]) dfa.set_accepting(q);
      }
      work.push_back(std::move(subset));
    }
    return it->second;
  };
  dfa.set_initial(intern(std::move(start)));
  while (!work.empty()) {
    std::vector<StateId> subset = std::move(work.front());
    work.pop_front();
    const StateId from = ids.at(subset);
    for (std::size_t sym = 0; sym < nfa.num_symbols; ++sym) {
      std::vector<StateId> target;
      for (StateId s : subset) {
        const auto& t = nfa.transitions[s][sym];
        target.insert(target.end(), t.begin(), t.end());
      }
      if (target.empty()) continue;
      std::sort(target.begin(), target.end());
      target.erase(std::unique(target.begin(), target.end()), target.end());
      dfa.set_transition(from, static_cast<int>(sym), intern(std::move(target)));
    }
  }
  return dfa;
}

/// Removes every state that is unreachable from the initial state or cannot
/// reach an accepting state. Surviving states keep their relative order.
inline Dfa trim(const Dfa& dfa) {
  const std::size_t n = dfa.num_states();
  const std::size_t k = dfa.num_symbols();
  std::vector<bool> reachable(n, false);
  if (!dfa.is_empty_language()) {
    std::vector<StateId> stack{dfa.initial()};
    reachable[dfa.initial()] = true;
    while (!stack.empty()) {
      StateId q = stack.back();
      stack.pop_back();
      for (std::size_t s = 0; s < k; ++s) {
        StateId t = dfa.next(q, static_cast<int>(s));
        if (t != kNoState && !reachable[t]) {
          reachable[t] = true;
          stack.push_back(t);
        }
      }
    }
  }
  std::vector<std::vector<StateId>> reverse(n);
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t s = 0; s < k; ++s) {
      StateId t = dfa.next(static_cast<StateId>(q), static_cast<int>(s));
      if (t != kNoState) reverse[t].push_back(static_cast<StateId>(q));
    }
  }
  std::vector<bool> productive(n, false);
  std::vector<StateId> stack;
  for (std::size_t q = 0; q < n; ++q) {
    if (dfa.is_accepting(static_cast<StateId>(q))) {
      productive[q] = true;
      stack.push_back(static_cast<StateId>(q));
    }
  }
  while (!stack.empty()) {
    StateId q = stack.back();
    stack.pop_back();
    for (StateId p : reverse[q]) {
      if (!productive[p]) {
        productive[p] = true;
        stack.push_back(p);
      }
    }
  }

  Dfa out(dfa.alphabet());
  std::vector<StateId> renumber(n, kNoState);
  for (std::size_t q = 0; q < n; ++q) {
    if (reachable[q] && productive[q]) renumber[q] = out.add_state();
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (renumber[q] == kNoState) continue;
    out.set_accepting(renumber[q], dfa.is_accepting(static_cast<StateId>(q)));
    for (std::size_t s = 0; s < k; ++s) {
      StateId t = dfa.next(static_cast<StateId>(q), static_cast<int>(s));
      if (t != kNoState && renumber[t] != kNoState) {
        out.set_transition(renumber[q], static_cast<int>(s), renumber[t]);
      }
    }
  }
  if (!dfa.is_empty_language() && renumber[dfa.initial()] != kNoState) {
    out.set_initial(renumber[dfa.initial()]);
  }
  out.trim_ = true;
  return out;
}

/// Hopcroft partition refinement. The input is completed with an implicit
/// sink, which is dropped again afterwards; the result is trim, minimal and
/// numbered breadth-first from the initial state.
inline Dfa minimize(const Dfa& input) {
  const Dfa dfa = input.is_trim() ? input : trim(input);
  if (dfa.is_empty_language()) return dfa;
  const std::size_t n = dfa.num_states() + 1;  // last state is the sink
  const std::size_t k = dfa.num_symbols();
  const auto sink = static_cast<StateId>(n - 1);
  auto step = [&](StateId q, std::size_t s) {
    if (q == sink) return sink;
    StateId t = dfa.next(q, static_cast<int>(s));
    return t == kNoState ? sink : t;
  };
  // inverse[s][q] = predecessors of q under s.
  std::vector<std::vector<std::vector<StateId>>> inverse(k, std::vector<std::vector<StateId>>(n));
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t s = 0; s < k; ++s) inverse[s][step(static_cast<StateId>(q), s)].push_back(static_cast<StateId>(q));
  }

  std::vector<int> block_of(n);
  std::vector<std::vector<StateId>> blocks(2);
  for (std::size_t q = 0; q < n; ++q) {
    const bool acc = q != n - 1 && dfa.is_accepting(static_cast<StateId>(q));
    block_of[q] = acc ? 0 : 1;
    blocks[block_of[q]].push_back(static_cast<StateId>(q));
  }
  if (blocks[0].empty() || blocks[1].empty()) {
    std::erase_if(blocks, [](const auto& b) { return b.empty(); });
    for (std::size_t q = 0; q < n; ++q) block_of[q] = 0;
  }

  std::vector<bool> in_work(blocks.size(), false);
  std::deque<int> work;
  // Seeding with the smaller of the two initial blocks suffices.
  if (blocks.size() == 2) {
    int seed = blocks[0].size() <= blocks[1].size() ? 0 : 1;
    work.push_back(seed);
    in_work[seed] = true;
  }
  while (!work.empty()) {
    const int splitter = work.front();
    work.pop_front();
    in_work[splitter] = false;
    const std::vector<StateId> splitter_states = blocks[splitter];
    for (std::size_t s = 0; s < k; ++s) {
      std::vector<bool> hit(n, false);
      std::vector<int> touched;
      for (StateId q : splitter_states) {
        for (StateId p : inverse[s][q]) {
          if (!hit[p]) {
            hit[p] = true;
            touched.push_back(block_of[p]);
          }
        }
      }
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      for (int b : touched) {
        std::vector<StateId> inside;
        std::vector<StateId> outside;
        for (StateId q : blocks[b]) (hit[q] ? inside : outside).push_back(q);
        if (inside.empty() || outside.empty()) continue;
        const int fresh = static_cast<int>(blocks.size());
        const bool inside_smaller = inside.size() <= outside.size();
        blocks[b] = inside_smaller ? std::move(outside) : std::move(inside);
        blocks.push_back(inside_smaller ? std::move(inside) : std::move(outside));
        for (StateId q : blocks[fresh]) block_of[q] = fresh;
        // `fresh` is the smaller half: if b is still queued both halves end
        // up queued, otherwise the smaller half is enough.
        in_work.push_back(true);
        work.push_back(fresh);
      }
    }
  }

  const int sink_block = block_of[sink];
  Dfa quotient(dfa.alphabet());
  std::vector<StateId> block_state(blocks.size(), kNoState);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (static_cast<int>(b) != sink_block) block_state[b] = quotient.add_state();
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (static_cast<int>(b) == sink_block) continue;
    const StateId rep = blocks[b].front();
    quotient.set_accepting(block_state[b], dfa.is_accepting(rep));
    for (std::size_t s = 0; s < k; ++s) {
      const int target = block_of[step(rep, s)];
      if (target != sink_block) quotient.set_transition(block_state[b], static_cast<int>(s), block_state[target]);
    }
  }
  quotient.set_initial(block_state[block_of[dfa.initial()]]);
  return trim(detail::canonical_order(quotient));
}

/// Regex to trim minimal DFA: position automaton, subset construction,
/// trimming, Hopcroft minimization.
inline Dfa compile(const RegexAst& ast, const OrderedAlphabet& alphabet) {
  return minimize(trim(determinize(to_nfa(ast, alphabet), alphabet)));
}

inline Dfa compile(std::string_view regex, const OrderedAlphabet& alphabet) {
  return compile(parse_regex(regex, alphabet), alphabet);
}

/// Language equality by breadth-first search over the product automaton,
/// with kNoState standing for the implicit sink of either side.
inline bool equivalent(const Dfa& a, const Dfa& b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw AutomatonError("cannot compare automata over different alphabets");
  }
  auto accepting = [](const Dfa& d, StateId q) { return q != kNoState && d.is_accepting(q); };
  auto step = [](const Dfa& d, StateId q, int s) { return q == kNoState ? kNoState : d.next(q, s); };
  std::map<std::pair<StateId, StateId>, bool> seen;
  std::deque<std::pair<StateId, StateId>> work{{a.initial(), b.initial()}};
  seen[work.front()] = true;
  while (!work.empty()) {
    auto [p, q] = work.front();
    work.pop_front();
    if (accepting(a, p) != accepting(b, q)) return false;
    if (p == kNoState && q == kNoState) continue;
    for (std::size_t s = 0; s < a.num_symbols(); ++s) {
      std::pair<StateId, StateId> next{step(a, p, static_cast<int>(s)), step(b, q, static_cast<int>(s))};
      if (seen.emplace(next, true).second) work.push_back(next);
    }
  }
  return true;
}

inline void require_trim(const Dfa& dfa) {
  if (!dfa.is_trim()) throw AutomatonError("automaton is not trim");
}

/// Automaton for the set of all factors of L(dfa): every state is made both
/// initial and accepting, then the result is determinized and minimized.
inline Dfa factorial_closure(const Dfa& input) {
  const Dfa dfa = input.is_trim() ? input : trim(input);
  const std::size_t n = dfa.num_states();
  Nfa nfa(n, dfa.num_symbols());
  for (std::size_t q = 0; q < n; ++q) {
    nfa.initial.push_back(static_cast<StateId>(q));
    nfa.accepting[q] = true;
    for (std::size_t s = 0; s < dfa.num_symbols(); ++s) {
      StateId t = dfa.next(static_cast<StateId>(q), static_cast<int>(s));
      if (t != kNoState) nfa.transitions[q][s].push_back(t);
    }
  }
  return minimize(trim(determinize(nfa, dfa.alphabet())));
}

inline bool is_factorial(const Dfa& dfa) { return equivalent(dfa, factorial_closure(dfa)); }

/// A trim automaton recognizes an infinite language iff it has a cycle.
inline bool is_infinite(const Dfa& input) {
  const Dfa dfa = input.is_trim() ? input : trim(input);
  const std::size_t n = dfa.num_states();
  enum : char { White, Grey, Black };
  std::vector<char> colour(n, White);
  // Iterative DFS; frames hold (state, next symbol to try).
  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root] != White) continue;
    std::vector<std::pair<StateId, std::size_t>> stack{{static_cast<StateId>(root), 0}};
    colour[root] = Grey;
    while (!stack.empty()) {
      auto& [q, s] = stack.back();
      if (s == dfa.num_symbols()) {
        colour[q] = Black;
        stack.pop_back();
        continue;
      }
      StateId t = dfa.next(q, static_cast<int>(s++));
      if (t == kNoState) continue;
      if (colour[t] == Grey) return true;
      if (colour[t] == White) {
        colour[t] = Grey;
        stack.emplace_back(t, 0);
      }
    }
  }
  return false;
}

inline bool accepts(const Dfa& dfa, std::string_view word) { return dfa.accepts(word); }

namespace detail {

inline std::string dump_symbol(Symbol s) {
  if (s > 0x20 && s < 0x7f && s != '\\') return std::string(1, static_cast<char>(s));
  static constexpr char kHex[] = "0123456789abcdef";
  return std::string("\\x") + kHex[s >> 4] + kHex[s & 0xf];
}

inline Symbol undump_symbol(const std::string& token) {
  if (token.size() == 1) return static_cast<Symbol>(token[0]);
  if (token.size() == 4 && token[0] == '\\' && token[1] == 'x') {
    return static_cast<Symbol>(std::stoi(token.substr(2), nullptr, 16));
  }
  throw AutomatonError("bad symbol token '" + token + "' in DFA dump");
}

}  // namespace detail

/// Line-oriented text form:
///   alphabet <symbols in order, space separated>
///   states N
///   initial q        (omitted for the empty language)
///   accepting q1 q2 ...
///   src symbol dst   (one line per transition)
/// Symbols outside printable ASCII, space and backslash are written as \xHH.
inline std::string dump(const Dfa& dfa) {
  std::ostringstream out;
  out << "alphabet";
  for (Symbol s : dfa.alphabet().symbols()) out << ' ' << detail::dump_symbol(s);
  out << "\nstates " << dfa.num_states() << '\n';
  if (!dfa.is_empty_language()) out << "initial " << dfa.initial() << '\n';
  out << "accepting";
  for (std::size_t q = 0; q < dfa.num_states(); ++q) {
    if (dfa.is_accepting(static_cast<StateId>(q))) out << ' ' << q;
  }
  out << '\n';
  for (std::size_t q = 0; q < dfa.num_states(); ++q) {
    for (std::size_t s = 0; s < dfa.num_symbols(); ++s) {
      StateId t = dfa.next(static_cast<StateId>(q), static_cast<int>(s));
      if (t != kNoState) {
        out << q << ' ' << detail::dump_symbol(dfa.alphabet().symbol_at(s)) << ' ' << t << '\n';
      }
    }
  }
  return out.str();
}

/// Inverse of dump(). The result is not marked trim.
inline Dfa parse_dump(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Dfa> dfa;
  std::optional<OrderedAlphabet> alphabet;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string head;
    if (!(fields >> head)) continue;
    if (head == "alphabet") {
      std::string symbols, token;
      while (fields >> token) symbols += static_cast<char>(detail::undump_symbol(token));
      alphabet.emplace(symbols);
    } else if (head == "states") {
      if (!alphabet) throw AutomatonError("DFA dump: 'states' before 'alphabet'");
      std::size_t n = 0;
      if (!(fields >> n)) throw AutomatonError("DFA dump: bad state count");
      dfa.emplace(*alphabet, n);
    } else if (!dfa) {
      throw AutomatonError("DFA dump: '" + head + "' before 'states'");
    } else if (head == "initial") {
      StateId q;
      if (!(fields >> q)) throw AutomatonError("DFA dump: bad initial state");
      dfa->set_initial(q);
    } else if (head == "accepting") {
      StateId q;
      while (fields >> q) dfa->set_accepting(q);
    } else {
      std::string symbol;
      StateId to;
      if (!(fields >> symbol >> to)) throw AutomatonError("DFA dump: bad transition line '" + line + "'");
      const StateId from = std::stoi(head);
      dfa->set_transition(from, alphabet->index_of(detail::undump_symbol(symbol)), to);
    }
  }
  if (!dfa) throw AutomatonError("DFA dump: missing header");
  return *dfa;
}

}  // namespace regans
