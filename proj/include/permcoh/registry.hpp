#ifndef PERMCOH_REGISTRY_HPP
#define PERMCOH_REGISTRY_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace permcoh {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class UnknownGeneratorError : public Error {
public:
  explicit UnknownGeneratorError(const std::string& name)
      : Error("unknown generator: " + name) {}
};

class NotInvertibleError : public Error {
public:
  explicit NotInvertibleError(const std::string& name)
      : Error("generator is not invertible: " + name) {}
};

class RegistryMismatchError : public Error {
public:
  RegistryMismatchError() : Error("values belong to different generator registries") {}
};

/// The declared generator set. Order of declaration is significant: it fixes
/// the component order of grading vectors and the order of report output.
class Registry {
public:
  struct Entry {
    std::string name;
    bool invertible;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  Registry() = default;
  explicit Registry(std::vector<Entry> entries) {
    for (auto& e : entries) add(e.name, e.invertible);
  }

  void add(const std::string& name, bool invertible) {
    if (name.empty()) throw Error("generator name must be non-empty");
    if (index_.count(name)) throw Error("duplicate generator: " + name);
    index_.emplace(name, static_cast<int>(entries_.size()));
    entries_.push_back({name, invertible});
  }

  int size() const { return static_cast<int>(entries_.size()); }

  const Entry& entry(int i) const { return entries_.at(static_cast<size_t>(i)); }
  const std::string& name(int i) const { return entry(i).name; }
  bool invertible(int i) const { return entry(i).invertible; }

  int index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw UnknownGeneratorError(name);
    return it->second;
  }
  bool contains(const std::string& name) const { return index_.count(name) != 0; }

  const std::vector<Entry>& entries() const { return entries_; }

  friend bool operator==(const Registry& a, const Registry& b) {
    return a.entries_ == b.entries_;
  }

private:
  std::vector<Entry> entries_;
  std::map<std::string, int> index_;
};

using RegistryPtr = std::shared_ptr<const Registry>;

inline RegistryPtr make_registry(std::initializer_list<Registry::Entry> entries) {
  return std::make_shared<const Registry>(std::vector<Registry::Entry>(entries));
}

/// Two registries are interchangeable when they declare the same generators in
/// the same order with the same flags.
inline bool same_registry(const RegistryPtr& a, const RegistryPtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_registry(const RegistryPtr& a, const RegistryPtr& b) {
  if (!same_registry(a, b)) throw RegistryMismatchError();
}

/// A single formal letter: a generator or its formal inverse (primed).
struct Letter {
  int gen;
  bool primed;
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A formal object of the free permutative category: a flat, possibly empty
/// sequence of letters. Strictness of the monoidal structure means flat
/// sequences are canonical; the empty word is the monoidal unit and object
/// equality is literal sequence equality.
class Word {
public:
  Word() = default;
  Word(RegistryPtr reg, std::vector<Letter> letters)
      : reg_(std::move(reg)), letters_(std::move(letters)) {
    for (const Letter& l : letters_) {
      if (l.gen < 0 || l.gen >= reg_->size()) throw Error("letter index out of range");
      if (l.primed && !reg_->invertible(l.gen))
        throw NotInvertibleError(reg_->name(l.gen));
    }
  }

  static Word empty(RegistryPtr reg) { return Word(std::move(reg), {}); }

  /// Parses whitespace-separated letters; "0" denotes the empty word.
  /// A trailing ASCII apostrophe marks the formal inverse.
  static Word parse(const RegistryPtr& reg, const std::string& text) {
    std::istringstream in(text);
    std::vector<Letter> letters;
    std::string tok;
    while (in >> tok) {
      if (tok == "0") {
        if (!letters.empty() || (in >> tok))
          throw Error("the unit literal 0 cannot be mixed with letters");
        break;
      }
      bool primed = tok.size() > 1 && tok.back() == '\'';
      if (primed) tok.pop_back();
      int gen = reg->index_of(tok);
      if (primed && !reg->invertible(gen)) throw NotInvertibleError(tok);
      letters.push_back({gen, primed});
    }
    return Word(reg, std::move(letters));
  }

  const RegistryPtr& registry() const { return reg_; }
  const std::vector<Letter>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool is_empty() const { return letters_.empty(); }

  const Letter& at(int i) const { return letters_.at(static_cast<size_t>(i)); }

  Word slice(int from, int to) const {
    return Word(reg_, std::vector<Letter>(letters_.begin() + from, letters_.begin() + to));
  }

  std::string str() const {
    if (letters_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < letters_.size(); ++i) {
      if (i) out += ' ';
      out += reg_->name(letters_[i].gen);
      if (letters_[i].primed) out += '\'';
    }
    return out;
  }

  friend bool operator==(const Word& a, const Word& b) {
    return same_registry(a.reg_, b.reg_) && a.letters_ == b.letters_;
  }

  /// Monoidal sum of objects: concatenation. Strictly associative and unital.
  friend Word operator+(const Word& a, const Word& b) {
    if (a.is_empty() && !a.reg_) return b;
    if (b.is_empty() && !b.reg_) return a;
    require_same_registry(a.reg_, b.reg_);
    std::vector<Letter> letters = a.letters_;
    letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
    return Word(a.reg_ ? a.reg_ : b.reg_, std::move(letters));
  }

private:
  RegistryPtr reg_;
  std::vector<Letter> letters_;
};

inline Word concat(const Word& a, const Word& b) { return a + b; }

/// (#occurrences of g) minus (#occurrences of g') in w.
inline int signed_count(const Word& w, int gen) {
  int n = 0;
  for (const Letter& l : w.letters())
    if (l.gen == gen) n += l.primed ? -1 : 1;
  return n;
}

inline int signed_count(const Word& w, const std::string& gen) {
  return signed_count(w, w.registry()->index_of(gen));
}

/// Total number of g-letters, primed or not.
inline int letter_count(const Word& w, int gen) {
  int n = 0;
  for (const Letter& l : w.letters())
    if (l.gen == gen) ++n;
  return n;
}

/// Per-generator signed letter counts, in registry order. Every formal
/// morphism preserves this grading of its boundary words.
using GradingVector = std::vector<int>;

inline GradingVector grading(const Word& w) {
  GradingVector g(static_cast<size_t>(w.registry() ? w.registry()->size() : 0), 0);
  for (const Letter& l : w.letters()) g[static_cast<size_t>(l.gen)] += l.primed ? -1 : 1;
  return g;
}

} // namespace permcoh

#endif
