#include "gf/presented.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <map>

namespace gf {

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  Word parse_word(std::string const& text, std::string const& alphabet) {
    Word w;
    for (std::size_t i = 0; i < text.size(); ++i) {
      char const c = text[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        continue;
      }
      auto const pos = alphabet.find(c);
      if (pos == std::string::npos) {
        throw ParseError("word '" + text + "': unknown letter '" + std::string(1, c)
                         + "' at position " + std::to_string(i));
      }
      Letter x = static_cast<Letter>(pos) + 1;
      if (i + 1 < text.size() && (text[i + 1] == '\'' || text[i + 1] == '*')) {
        x = -x;
        ++i;
      }
      w.push_back(x);
    }
    return w;
  }

  std::string format_word(Word const& w, std::string const& alphabet) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (Letter x : w) {
      out += alphabet.at(static_cast<std::size_t>(std::abs(x)) - 1);
      if (x < 0) {
        out += '\'';
      }
    }
    return out;
  }

  Word free_reduce(Word w) {
    Word out;
    for (Letter x : w) {
      if (!out.empty() && out.back() == -x) {
        out.pop_back();
      } else {
        out.push_back(x);
      }
    }
    return out;
  }

  Word invert_word(Word const& w) {
    Word out(w.rbegin(), w.rend());
    for (Letter& x : out) {
      x = -x;
    }
    return out;
  }

  LetterSet content(Word const& w) {
    LetterSet c = 0;
    for (Letter x : w) {
      c |= LetterSet{1} << (std::abs(x) - 1);
    }
    return c;
  }

  namespace {
    Word concat(Word a, Word const& b) {
      a.insert(a.end(), b.begin(), b.end());
      return a;
    }

    Word translate(Word const& g, Word const& v) {
      return free_reduce(concat(g, v));
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Munn trees
  ////////////////////////////////////////////////////////////////////////

  MunnTree MunnTree::from_word(Word const& w) {
    MunnTree t;
    Word     current;
    for (Letter x : w) {
      current = translate(current, {x});
      t._vertices.insert(current);
    }
    t._end = current;
    return t;
  }

  LetterSet MunnTree::edge_letters() const {
    LetterSet out = 0;
    for (auto const& v : _vertices) {
      if (!v.empty()) {
        out |= LetterSet{1} << (std::abs(v.back()) - 1);
      }
    }
    return out;
  }

  MunnTree MunnTree::operator*(MunnTree const& other) const {
    MunnTree t;
    t._vertices = _vertices;
    for (auto const& v : other._vertices) {
      t._vertices.insert(translate(_end, v));
    }
    t._end = translate(_end, other._end);
    return t;
  }

  MunnTree MunnTree::inverse() const {
    MunnTree   t;
    Word const g = invert_word(_end);
    t._vertices.clear();
    for (auto const& v : _vertices) {
      t._vertices.insert(translate(g, v));
    }
    t._end = g;
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // FCIS
  ////////////////////////////////////////////////////////////////////////

  FcisElement::FcisElement(LetterSet support, Word word)
      : _support(support), _word(std::move(word)) {
    if (_support == 0) {
      throw EmptySupport("FCIS element with empty support");
    }
    if (free_reduce(_word) != _word) {
      throw Error("FCIS element word is not reduced");
    }
    if ((content(_word) & ~_support) != 0) {
      throw Error("FCIS element word uses a letter outside its support");
    }
  }

  FcisElement FcisElement::from_word(Word const& w) {
    return FcisElement(content(w), free_reduce(w));
  }

  FcisElement FcisElement::generator(Letter x) {
    return from_word({x});
  }

  FcisElement FcisElement::idempotent(LetterSet A) {
    return FcisElement(A, {});
  }

  FcisElement FcisElement::operator*(FcisElement const& other) const {
    return FcisElement(_support | other._support, translate(_word, other._word));
  }

  FcisElement FcisElement::inverse() const {
    return FcisElement(_support, invert_word(_word));
  }

  FcisElement munn_to_fcis(MunnTree const& t) {
    return FcisElement(t.edge_letters(), t.end());
  }

  std::vector<LetterSet> fcis_characters(std::size_t n) {
    if (n > max_alphabet) {
      throw SizeLimitExceeded("alphabet larger than " + std::to_string(max_alphabet));
    }
    std::vector<LetterSet> out;
    for (LetterSet A = 1; A < (LetterSet{1} << n); ++A) {
      out.push_back(A);
    }
    return out;
  }

  int fcis_evaluate_char(LetterSet A, FcisElement const& s) {
    if (A == 0) {
      throw EmptySupport("chi_A needs a nonempty A");
    }
    return (s.support() & ~A) == 0 ? 1 : 0;
  }

  std::optional<Word> fcis_quotient_by_char(LetterSet A, FcisElement const& s) {
    if (fcis_evaluate_char(A, s) == 0) {
      return std::nullopt;
    }
    return s.word();
  }

  bool fcis_nu_related(LetterSet A, FcisElement const& s, FcisElement const& t, std::size_t n) {
    auto const ds = FcisElement::idempotent(s.support());
    auto const dt = FcisElement::idempotent(t.support());
    int const  cls = fcis_evaluate_char(A, ds);
    if (cls != fcis_evaluate_char(A, dt)) {
      return false;
    }
    for (LetterSet B : fcis_characters(n)) {
      auto const e = FcisElement::idempotent(B);
      if (fcis_evaluate_char(A, e) == cls && s * e == t * e) {
        return true;
      }
    }
    return false;
  }

  element_id evaluate_word(FiniteInverseSemigroup const& T,
                           std::vector<element_id> const& assignment,
                           Word const&                    w) {
    if (w.empty()) {
      throw Error("cannot evaluate the empty word in a semigroup");
    }
    auto value = [&](Letter x) {
      element_id const g = assignment.at(static_cast<std::size_t>(std::abs(x)) - 1);
      return x > 0 ? g : T.inverse(g);
    };
    element_id v = value(w.front());
    for (std::size_t i = 1; i < w.size(); ++i) {
      v = T.product(v, value(w[i]));
    }
    return v;
  }

  namespace {
    // Calls f(assignment) for every map from n letters into T.
    template <typename F>
    bool for_each_assignment(FiniteInverseSemigroup const& T, std::size_t n, F&& f) {
      std::vector<element_id> a(n, 0);
      while (true) {
        if (!f(a)) {
          return false;
        }
        std::size_t i = 0;
        while (i < n && ++a[i] == T.size()) {
          a[i++] = 0;
        }
        if (i == n) {
          return true;
        }
      }
    }

    void require_clifford(FiniteInverseSemigroup const& T) {
      if (!is_clifford(T)) {
        throw NotClifford("oracle target is not Clifford");
      }
    }

    std::vector<Letter> letters(std::size_t n) {
      std::vector<Letter> out;
      for (std::size_t i = 1; i <= n; ++i) {
        out.push_back(static_cast<Letter>(i));
        out.push_back(-static_cast<Letter>(i));
      }
      return out;
    }
  }  // namespace

  bool fcis_oracle_check(Word const&                                w1,
                         Word const&                                w2,
                         std::vector<FiniteInverseSemigroup> const& targets,
                         std::size_t                                n) {
    for (auto const& T : targets) {
      require_clifford(T);
      bool const agree = for_each_assignment(T, n, [&](auto const& a) {
        return evaluate_word(T, a, w1) == evaluate_word(T, a, w2);
      });
      if (!agree) {
        return false;
      }
    }
    return true;
  }

  std::vector<Word> all_words(std::size_t n, std::size_t max_length) {
    std::vector<Word> out;
    std::size_t       begin = 0;
    for (Letter x : letters(n)) {
      if (max_length > 0) {
        out.push_back({x});
      }
    }
    for (std::size_t len = 2; len <= max_length; ++len) {
      std::size_t const end = out.size();
      for (std::size_t i = begin; i < end; ++i) {
        for (Letter x : letters(n)) {
          Word w = out[i];
          w.push_back(x);
          out.push_back(std::move(w));
        }
      }
      begin = end;
    }
    return out;
  }

  std::optional<OracleCounterexample>
  fcis_oracle_sweep(std::size_t                                n,
                    std::size_t                                max_length,
                    std::vector<FiniteInverseSemigroup> const& targets) {
    auto const words  = all_words(n, max_length);
    auto const alpha  = letters(n);
    std::size_t const k = alpha.size();
    // In all_words order the parent of word i (length >= 2) is (i - k) / k
    // and its last letter is alpha[i % k].
    std::map<FcisElement, std::size_t> first;
    std::vector<std::size_t>           rep(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
      rep[i] = first.emplace(FcisElement::from_word(words[i]), i).first->second;
    }
    std::vector<element_id> value(words.size());
    for (std::size_t t = 0; t < targets.size(); ++t) {
      auto const& T = targets[t];
      require_clifford(T);
      std::optional<OracleCounterexample> found;
      for_each_assignment(T, n, [&](auto const& a) {
        for (std::size_t i = 0; i < words.size(); ++i) {
          Letter const     x = alpha[i % k];
          element_id const g = x > 0 ? a[x - 1] : T.inverse(a[-x - 1]);
          value[i]           = i < k ? g : T.product(value[(i - k) / k], g);
          if (value[i] != value[rep[i]]) {
            found = OracleCounterexample{words[rep[i]], words[i], t};
            return false;
          }
        }
        return true;
      });
      if (found) {
        return found;
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cuntz
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // b = a k for some k; returns k.
    std::optional<Word> strip_prefix(Word const& a, Word const& b) {
      if (a.size() > b.size() || !std::equal(a.begin(), a.end(), b.begin())) {
        return std::nullopt;
      }
      return Word(b.begin() + static_cast<std::ptrdiff_t>(a.size()), b.end());
    }
  }  // namespace

  CuntzElement cuntz_multiply(CuntzElement const& a, CuntzElement const& b) {
    if (a.zero || b.zero) {
      return CuntzElement::make_zero();
    }
    // s_mu s_nu* s_mu' s_nu'*
    if (auto k = strip_prefix(a.nu, b.mu)) {
      return CuntzElement{false, concat(a.mu, *k), b.nu};
    }
    if (auto k = strip_prefix(b.mu, a.nu)) {
      return CuntzElement{false, a.mu, concat(b.nu, *k)};
    }
    return CuntzElement::make_zero();
  }

  std::string format_cuntz(CuntzElement const& a) {
    if (a.zero) {
      return "0";
    }
    if (a.mu.empty() && a.nu.empty()) {
      return "1";
    }
    std::string out;
    for (Letter x : a.mu) {
      out += "s" + std::to_string(x);
    }
    for (auto it = a.nu.rbegin(); it != a.nu.rend(); ++it) {
      out += "s" + std::to_string(*it) + "*";
    }
    return out;
  }

  std::vector<CuntzElement> cuntz_ball(std::size_t n, std::size_t L) {
    std::vector<Word> positive{Word{}};
    for (std::size_t i = 0; i < positive.size(); ++i) {
      if (positive[i].size() < L) {
        for (std::size_t x = 1; x <= n; ++x) {
          positive.push_back(concat(positive[i], {static_cast<Letter>(x)}));
        }
      }
    }
    std::vector<CuntzElement> out{CuntzElement::make_zero()};
    for (auto const& mu : positive) {
      for (auto const& nu : positive) {
        if (mu.size() + nu.size() <= L) {
          out.push_back(CuntzElement{false, mu, nu});
        }
      }
    }
    return out;
  }

  std::size_t cuntz_homs_to_two(std::size_t n, std::size_t L) {
    if (n == 0) {
      throw Error("Cuntz semigroup needs n >= 1");
    }
    if (2 * n + 2 > 30) {
      throw SizeLimitExceeded("too many Cuntz generators for the hom search");
    }
    auto const                    ball = cuntz_ball(n, L);
    std::map<CuntzElement, std::size_t> index;
    for (std::size_t i = 0; i < ball.size(); ++i) {
      index.emplace(ball[i], i);
    }
    // Products that stay inside the ball.
    std::vector<std::array<std::size_t, 3>> triples;
    for (std::size_t i = 0; i < ball.size(); ++i) {
      for (std::size_t j = 0; j < ball.size(); ++j) {
        auto it = index.find(cuntz_multiply(ball[i], ball[j]));
        if (it != index.end()) {
          triples.push_back({i, j, it->second});
        }
      }
    }
    // Generator bits: 0 -> zero, 1 -> unit, 2 + 2i -> s_{i+1}, 3 + 2i -> s_{i+1}*.
    std::size_t      count = 0;
    std::vector<int> value(ball.size());
    for (std::uint32_t g = 0; g < (std::uint32_t{1} << (2 * n + 2)); ++g) {
      auto bit = [&](std::size_t k) { return static_cast<int>((g >> k) & 1U); };
      bool nonzero = false;
      for (std::size_t i = 0; i < ball.size(); ++i) {
        auto const& e = ball[i];
        if (e.zero) {
          value[i] = bit(0);
        } else if (e.mu.empty() && e.nu.empty()) {
          value[i] = bit(1);
        } else {
          int v = 1;
          for (Letter x : e.mu) {
            v &= bit(2 + 2 * static_cast<std::size_t>(x - 1));
          }
          for (Letter x : e.nu) {
            v &= bit(3 + 2 * static_cast<std::size_t>(x - 1));
          }
          value[i] = v;
        }
        nonzero = nonzero || value[i] == 1;
      }
      bool const hom = std::all_of(triples.begin(), triples.end(), [&](auto const& t) {
        return value[t[2]] == (value[t[0]] & value[t[1]]);
      });
      if (hom && nonzero) {
        ++count;
      }
    }
    return count;
  }

}  // namespace gf
