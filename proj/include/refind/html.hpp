// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 refind contributors
#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>

#include "refind/errors.hpp"
#include "refind/utf8.hpp"

// Deliberately not an HTML5 tree builder: just the scanning needed to pull
// the first TITLE element and count visible words out of dirty crawl data.
namespace refind::html {

namespace detail {

inline bool ieq(char a, char b) {
    return std::tolower(static_cast<unsigned char>(a)) ==
           std::tolower(static_cast<unsigned char>(b));
}

/// Case-insensitive substring search (ASCII).
inline std::size_t ifind(std::string_view hay, std::string_view needle,
                         std::size_t from = 0) {
    if (needle.empty() || hay.size() < needle.size())
        return std::string_view::npos;
    for (std::size_t i = from; i + needle.size() <= hay.size(); ++i) {
        std::size_t j = 0;
        while (j < needle.size() && ieq(hay[i + j], needle[j])) ++j;
        if (j == needle.size()) return i;
    }
    return std::string_view::npos;
}

/// True when the char that follows a matched tag name terminates it
/// (so "<titlex>" is not a TITLE tag but "<title >" and "<title/>" are).
inline bool ends_tag_name(char c) {
    return utf8::is_space(c) || c == '>' || c == '/';
}

inline const std::unordered_map<std::string_view, char32_t>& named_entities() {
    static const std::unordered_map<std::string_view, char32_t> table = {
        {"amp", U'&'},     {"lt", U'<'},      {"gt", U'>'},
        {"quot", U'"'},    {"apos", U'\''},   {"nbsp", U' '},
        {"copy", 0xA9},    {"reg", 0xAE},     {"trade", 0x2122},
        {"deg", 0xB0},     {"middot", 0xB7},  {"laquo", 0xAB},
        {"raquo", 0xBB},   {"mdash", 0x2014}, {"ndash", 0x2013},
        {"hellip", 0x2026},{"lsquo", 0x2018}, {"rsquo", 0x2019},
        {"ldquo", 0x201C}, {"rdquo", 0x201D}, {"bull", 0x2022},
        {"euro", 0x20AC},  {"pound", 0xA3},   {"cent", 0xA2},
        {"yen", 0xA5},     {"sect", 0xA7},    {"para", 0xB6},
        {"plusmn", 0xB1},  {"times", 0xD7},   {"divide", 0xF7},
        {"iexcl", 0xA1},   {"iquest", 0xBF},  {"szlig", 0xDF},
        {"agrave", 0xE0},  {"aacute", 0xE1},  {"auml", 0xE4},
        {"aring", 0xE5},   {"aelig", 0xE6},   {"ccedil", 0xE7},
        {"egrave", 0xE8},  {"eacute", 0xE9},  {"ecirc", 0xEA},
        {"iacute", 0xED},  {"ntilde", 0xF1},  {"oacute", 0xF3},
        {"ouml", 0xF6},    {"oslash", 0xF8},  {"uacute", 0xFA},
        {"uuml", 0xFC},
    };
    return table;
}

inline void append_entity_codepoint(std::string& out, char32_t cp) {
    // No-break space renders as plain space so downstream whitespace
    // collapsing and tokenization see it as a word separator.
    if (cp == 0xA0) cp = U' ';
    utf8::encode(cp, out);
}

}  // namespace detail

/// Single-pass entity decoding: `&name;`, `&#ddd;`, `&#xhh;`. Unknown or
/// unterminated references are kept verbatim; output is never re-decoded.
inline std::string decode_entities(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '&') {
            out.push_back(s[i++]);
            continue;
        }
        const auto semi = s.find(';', i + 1);
        if (semi == std::string_view::npos || semi == i + 1 ||
            semi - i > 34) {
            out.push_back(s[i++]);
            continue;
        }
        const std::string_view body = s.substr(i + 1, semi - i - 1);
        char32_t cp = 0;
        bool ok = false;
        if (body.front() == '#') {
            std::string_view digits = body.substr(1);
            int base = 10;
            if (!digits.empty() && (digits.front() == 'x' || digits.front() == 'X')) {
                base = 16;
                digits = digits.substr(1);
            }
            ok = !digits.empty();
            for (char c : digits) {
                const auto u = static_cast<unsigned char>(c);
                int d;
                if (std::isdigit(u)) d = c - '0';
                else if (base == 16 && std::isxdigit(u))
                    d = std::tolower(u) - 'a' + 10;
                else { ok = false; break; }
                cp = cp * static_cast<char32_t>(base) + static_cast<char32_t>(d);
                if (cp > 0x10FFFF) { ok = false; break; }
            }
            if (cp == 0 || (cp >= 0xD800 && cp <= 0xDFFF)) ok = false;
        } else {
            std::string name;
            name.reserve(body.size());
            for (char c : body)
                name.push_back(static_cast<char>(
                    std::tolower(static_cast<unsigned char>(c))));
            const auto& table = detail::named_entities();
            if (const auto it = table.find(name); it != table.end()) {
                cp = it->second;
                ok = true;
            }
        }
        if (!ok) {
            out.push_back(s[i++]);
            continue;
        }
        detail::append_entity_codepoint(out, cp);
        i = semi + 1;
    }
    return out;
}

/// Collapses runs of ASCII whitespace to single spaces and trims both ends.
inline std::string collapse_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool pending = false;
    for (char c : s) {
        if (utf8::is_space(c)) {
            pending = !out.empty();
        } else {
            if (pending) out.push_back(' ');
            pending = false;
            out.push_back(c);
        }
    }
    return out;
}

namespace detail {

/// Replaces every <...> region with a space; an unterminated "<" swallows
/// the rest of the input.
inline std::string strip_tags(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == '<') {
            const auto close = s.find('>', i + 1);
            if (close == std::string_view::npos) break;
            out.push_back(' ');
            i = close + 1;
        } else {
            out.push_back(s[i++]);
        }
    }
    return out;
}

/// Erases comments plus SCRIPT/STYLE elements (contents included),
/// substituting a space so adjacent words do not fuse.
inline std::string drop_invisible(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        if (s.compare(i, 4, "<!--") == 0) {
            const auto end = s.find("-->", i + 4);
            out.push_back(' ');
            if (end == std::string_view::npos) break;
            i = end + 3;
            continue;
        }
        bool handled = false;
        for (const std::string_view name : {std::string_view("script"),
                                            std::string_view("style")}) {
            if (s[i] == '<' && i + 1 + name.size() <= s.size() &&
                ifind(s.substr(i + 1, name.size()), name) == 0 &&
                (i + 1 + name.size() == s.size() ||
                 ends_tag_name(s[i + 1 + name.size()]))) {
                std::string closer = "</";
                closer += name;
                const auto close = ifind(s, closer, i);
                out.push_back(' ');
                if (close == std::string_view::npos) {
                    i = s.size();
                } else {
                    const auto gt = s.find('>', close);
                    i = (gt == std::string_view::npos) ? s.size() : gt + 1;
                }
                handled = true;
                break;
            }
        }
        if (handled) continue;
        out.push_back(s[i++]);
    }
    return out;
}

}  // namespace detail

/// Character content of the first TITLE element: embedded markup stripped,
/// entities decoded, whitespace collapsed, ends trimmed. Missing TITLE
/// yields ""; an unclosed TITLE captures up to the next tag open.
inline std::string extract_title(std::string_view html) {
    std::size_t pos = 0;
    std::size_t open = std::string_view::npos;
    while (true) {
        pos = detail::ifind(html, "<title", pos);
        if (pos == std::string_view::npos) return "";
        const std::size_t after = pos + 6;
        if (after >= html.size() || detail::ends_tag_name(html[after])) {
            open = pos;
            break;
        }
        pos = after;
    }
    const auto open_gt = html.find('>', open);
    if (open_gt == std::string_view::npos) return "";
    const std::size_t begin = open_gt + 1;
    auto end = detail::ifind(html, "</title", begin);
    std::string_view content;
    if (end == std::string_view::npos) {
        const auto lt = html.find('<', begin);
        end = (lt == std::string_view::npos) ? html.size() : lt;
        content = html.substr(begin, end - begin);
        return collapse_whitespace(decode_entities(content));
    }
    content = html.substr(begin, end - begin);
    return collapse_whitespace(decode_entities(detail::strip_tags(content)));
}

/// The document's visible text: tags, comments and SCRIPT/STYLE contents
/// removed (each leaves a space), entities decoded. Not whitespace-
/// normalized; callers tokenize or collapse as needed.
inline std::string visible_text(std::string_view html) {
    return decode_entities(detail::strip_tags(detail::drop_invisible(html)));
}

/// Count of whitespace-separated visible-text tokens.
inline std::size_t content_word_count(std::string_view html) {
    const std::string text = visible_text(html);
    std::size_t count = 0;
    bool in_word = false;
    for (char c : text) {
        if (utf8::is_space(c)) {
            in_word = false;
        } else if (!in_word) {
            in_word = true;
            ++count;
        }
    }
    return count;
}

namespace detail {

inline std::string sniff_charset(std::string_view bytes) {
    const std::size_t limit = std::min<std::size_t>(bytes.size(), 4096);
    std::string head;
    head.reserve(limit);
    for (std::size_t i = 0; i < limit; ++i)
        head.push_back(static_cast<char>(
            std::tolower(static_cast<unsigned char>(bytes[i]))));
    auto p = head.find("charset=");
    if (p == std::string::npos) return "";
    p += 8;
    if (p < head.size() && (head[p] == '"' || head[p] == '\'')) ++p;
    auto e = p;
    while (e < head.size() &&
           (std::isalnum(static_cast<unsigned char>(head[e])) ||
            head[e] == '-' || head[e] == '_')) {
        ++e;
    }
    return head.substr(p, e - p);
}

inline std::string decode_latin1(std::string_view bytes) {
    std::string out;
    out.reserve(bytes.size());
    for (char c : bytes)
        utf8::encode(static_cast<unsigned char>(c), out);
    return out;
}

inline std::string decode_cp1252(std::string_view bytes,
                                 std::size_t& replacements) {
    // Windows-1252 0x80..0x9F block; 0 marks the five undefined slots.
    static constexpr std::array<char32_t, 32> kHigh = {
        0x20AC, 0,      0x201A, 0x0192, 0x201E, 0x2026, 0x2020, 0x2021,
        0x02C6, 0x2030, 0x0160, 0x2039, 0x0152, 0,      0x017D, 0,
        0,      0x2018, 0x2019, 0x201C, 0x201D, 0x2022, 0x2013, 0x2014,
        0x02DC, 0x2122, 0x0161, 0x203A, 0x0153, 0,      0x017E, 0x0178};
    std::string out;
    out.reserve(bytes.size());
    replacements = 0;
    for (char c : bytes) {
        const auto b = static_cast<unsigned char>(c);
        char32_t cp = b;
        if (b >= 0x80 && b <= 0x9F) {
            cp = kHigh[b - 0x80];
            if (cp == 0) {
                cp = utf8::kReplacement;
                ++replacements;
            }
        }
        utf8::encode(cp, out);
    }
    return out;
}

}  // namespace detail

/// Decodes raw page bytes to UTF-8 text. The declared charset (meta tag or
/// Content-Type echo within the first 4 KiB) selects among UTF-8 (default),
/// Latin-1 and Windows-1252; undecodable input is substituted with U+FFFD
/// and more than 10% substitutions raises MalformedHtml.
inline std::string decode_page(std::string_view bytes) {
    if (bytes.size() >= 3 && bytes.compare(0, 3, "\xEF\xBB\xBF") == 0)
        bytes = bytes.substr(3);
    const std::string charset = detail::sniff_charset(bytes);
    std::string text;
    std::size_t replacements = 0;
    if (charset == "iso-8859-1" || charset == "latin1" ||
        charset == "latin-1") {
        text = detail::decode_latin1(bytes);
    } else if (charset == "windows-1252" || charset == "cp1252" ||
               charset == "x-cp1252") {
        text = detail::decode_cp1252(bytes, replacements);
    } else {
        text = utf8::sanitize(bytes, replacements);
    }
    if (replacements > 0) {
        const std::size_t total = utf8::length(text);
        if (replacements * 10 > total)
            throw MalformedHtml("undecodable document: " +
                                std::to_string(replacements) + " of " +
                                std::to_string(total) +
                                " code points replaced");
    }
    return text;
}

}  // namespace refind::html
