#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace levelone {

  using Letter = std::uint32_t;
  // Words are stored as strings of alphabet symbols.
  using Word = std::string;

  // A finite alphabet of single-character symbols (a-z, 0-9), kept sorted.
  class Alphabet {
   public:
    Alphabet();
    // Sorts and deduplicates; throws ValidationError on an empty alphabet or a
    // symbol outside [a-z0-9].
    explicit Alphabet(std::string_view symbols);

    std::size_t size() const noexcept {
      return symbols_.size();
    }
    std::string const& symbols() const noexcept {
      return symbols_;
    }
    char symbol(Letter i) const {
      return symbols_[i];
    }
    std::optional<Letter> find(char c) const noexcept;
    // Throws UnknownSymbol.
    Letter index(char c) const;
    bool contains(char c) const noexcept {
      return find(c).has_value();
    }

    bool operator==(Alphabet const& other) const noexcept {
      return symbols_ == other.symbols_;
    }

    static bool is_valid_symbol(char c) noexcept;

   private:
    std::string symbols_;
    std::array<std::int16_t, 128> index_{};
  };

}  // namespace levelone
