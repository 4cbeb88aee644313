#include "levelone/alphabet.hpp"

#include <algorithm>

#include "levelone/error.hpp"

namespace levelone {

  Alphabet::Alphabet() {
    index_.fill(-1);
  }

  Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
    index_.fill(-1);
    std::sort(symbols_.begin(), symbols_.end());
    symbols_.erase(std::unique(symbols_.begin(), symbols_.end()),
                   symbols_.end());
    if (symbols_.empty()) {
      throw ValidationError("alphabet must not be empty");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      char c = symbols_[i];
      if (!is_valid_symbol(c)) {
        throw ValidationError(std::string("invalid alphabet symbol '") + c
                              + "' (expected a-z or 0-9)");
      }
      index_[static_cast<unsigned char>(c)] = static_cast<std::int16_t>(i);
    }
  }

  bool Alphabet::is_valid_symbol(char c) noexcept {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
  }

  std::optional<Letter> Alphabet::find(char c) const noexcept {
    auto u = static_cast<unsigned char>(c);
    if (u >= index_.size() || index_[u] < 0) {
      return std::nullopt;
    }
    return static_cast<Letter>(index_[u]);
  }

  Letter Alphabet::index(char c) const {
    auto i = find(c);
    if (!i) {
      throw UnknownSymbol(c);
    }
    return *i;
  }

}  // namespace levelone
