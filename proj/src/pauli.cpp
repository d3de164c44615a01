#include "gstest/pauli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "gstest/errors.hpp"

namespace gstest {

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Z: return 'Z';
    case Pauli::Y: return 'Y';
  }
  return '?';
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default:
      throw ParseError(std::string("invalid Pauli letter '") + c + "'");
  }
}

void SparsePauli::set(std::uint32_t vertex, Pauli p) {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), vertex,
      [](const Term& t, std::uint32_t v) { return t.first < v; });
  const bool present = it != terms_.end() && it->first == vertex;
  if (p == Pauli::I) {
    if (present) terms_.erase(it);
    return;
  }
  if (present) {
    it->second = p;
  } else {
    terms_.insert(it, {vertex, p});
  }
}

Pauli SparsePauli::at(std::uint32_t vertex) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), vertex,
      [](const Term& t, std::uint32_t v) { return t.first < v; });
  if (it != terms_.end() && it->first == vertex) return it->second;
  return Pauli::I;
}

std::vector<std::uint32_t> SparsePauli::support() const {
  std::vector<std::uint32_t> out;
  out.reserve(terms_.size());
  for (const auto& [v, p] : terms_) out.push_back(v);
  return out;
}

std::string SparsePauli::str() const {
  std::string out;
  for (const auto& [v, p] : terms_) {
    if (!out.empty()) out += ' ';
    out += to_char(p);
    out += std::to_string(v);
  }
  return out;
}

SparsePauli SparsePauli::from_str(std::string_view text) {
  SparsePauli result;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    const Pauli p = pauli_from_char(text[i]);
    ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("Pauli letter must be followed by a vertex id in \"" +
                       std::string(text) + "\"");
    std::uint32_t vertex = 0;
    const auto [ptr, ec] =
        std::from_chars(text.data() + i, text.data() + text.size(), vertex);
    if (ec != std::errc())
      throw ParseError("bad vertex id in \"" + std::string(text) + "\"");
    i = static_cast<std::size_t>(ptr - text.data());
    if (p == Pauli::I)
      throw ParseError("identity letters are not part of the text form");
    if (result.at(vertex) != Pauli::I)
      throw ParseError("vertex " + std::to_string(vertex) +
                       " appears twice in \"" + std::string(text) + "\"");
    result.set(vertex, p);
  }
  return result;
}

bool anticommutes(const SparsePauli& a, const SparsePauli& b) {
  bool odd = false;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() && ib != b.terms().end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      odd ^= anticommutes(ia->second, ib->second);
      ++ia;
      ++ib;
    }
  }
  return odd;
}

SparsePauli product_up_to_phase(const SparsePauli& a, const SparsePauli& b) {
  SparsePauli out;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() ||
        (ia != a.terms().end() && ia->first < ib->first)) {
      out.set(ia->first, ia->second);
      ++ia;
    } else if (ia == a.terms().end() || ib->first < ia->first) {
      out.set(ib->first, ib->second);
      ++ib;
    } else {
      const auto xored = static_cast<std::uint8_t>(ia->second) ^
                         static_cast<std::uint8_t>(ib->second);
      out.set(ia->first, static_cast<Pauli>(xored));
      ++ia;
      ++ib;
    }
  }
  return out;
}

PauliEnumerator::PauliEnumerator(std::vector<std::uint32_t> support,
                                 std::size_t min_weight)
    : support_(std::move(support)),
      digits_(support_.size(), 0),
      min_weight_(min_weight) {
  if (support_.size() > kMaxEnumerationSupport)
    throw SupportTooLarge("enumeration support of " +
                          std::to_string(support_.size()) +
                          " exceeds the cap of " +
                          std::to_string(kMaxEnumerationSupport));
}

bool PauliEnumerator::advance() {
  std::size_t i = digits_.size();
  while (i > 0) {
    --i;
    if (digits_[i] == 3) {
      digits_[i] = 0;
      --weight_;
    } else {
      if (digits_[i] == 0) ++weight_;
      ++digits_[i];
      return true;
    }
  }
  return false;
}

bool PauliEnumerator::next(SparsePauli& out) {
  if (done_) return false;
  if (fresh_) {
    fresh_ = false;
  } else if (!advance()) {
    done_ = true;
    return false;
  }
  while (weight_ < min_weight_) {
    if (!advance()) {
      done_ = true;
      return false;
    }
  }
  static constexpr Pauli kDigitLetter[4] = {Pauli::I, Pauli::X, Pauli::Y,
                                            Pauli::Z};
  out.clear();
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] != 0) out.set(support_[i], kDigitLetter[digits_[i]]);
  }
  return true;
}

}  // namespace gstest
