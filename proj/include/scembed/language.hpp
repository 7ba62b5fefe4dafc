#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scembed {

enum class Language { Java, Python, PHP, C, Cpp, CSharp };

inline constexpr std::array<Language, 6> kAllLanguages = {
    Language::Java, Language::Python, Language::PHP,
    Language::C,    Language::Cpp,    Language::CSharp};

std::string_view to_string(Language lang);

/// Accepts the canonical spellings plus "C++" and "C#".
std::optional<Language> parse_language(std::string_view text);

/// Source file extensions counted for a language. Matching is case-sensitive;
/// ".h" belongs to C only, ".hpp" to C++.
const std::vector<std::string>& extensions_for(Language lang);

}  // namespace scembed
