/*
   Copyright 2026 The drinfeld-lab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "drinfeld/config.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "drinfeld/parse.hpp"

namespace drinfeld {

namespace {

class ConfigReader {
   public:
    explicit ConfigReader(std::string_view text) : text_(text) {}

    ConfigDoc read() {
        ConfigDoc doc;
        while (true) {
            skip_blank(true);
            if (pos_ >= text_.size()) return doc;
            std::size_t key_start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '-'))
                ++pos_;
            if (key_start == pos_) fail("expected a key");
            std::string key(text_.substr(key_start, pos_ - key_start));
            skip_blank(false);
            if (pos_ >= text_.size() || text_[pos_] != '=') fail("expected '='");
            ++pos_;
            skip_blank(false);
            if (doc.count(key)) throw ParseError("duplicate key '" + key + "'", key_start);
            doc[key] = value();
            skip_blank(false);
            if (pos_ < text_.size() && text_[pos_] != '\n') fail("trailing characters after value");
        }
    }

   private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_blank(bool newlines) {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
                ++pos_;
            } else {
                return;
            }
        }
    }

    std::string string_literal() {
        ++pos_;
        std::string out;
        while (pos_ < text_.size() && text_[pos_] != '"') {
            if (text_[pos_] == '\n') fail("unterminated string");
            if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
            out += text_[pos_++];
        }
        if (pos_ >= text_.size()) fail("unterminated string");
        ++pos_;
        return out;
    }

    long long integer_literal() {
        std::size_t start = pos_;
        if (text_[pos_] == '-' || text_[pos_] == '+') ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string digits(text_.substr(start, pos_ - start));
        if (digits.empty() || digits == "-" || digits == "+") throw ParseError("expected a value", start);
        try {
            return std::stoll(digits);
        } catch (const std::exception&) {
            throw ParseError("integer out of range", start);
        }
    }

    ConfigValue value() {
        if (pos_ >= text_.size()) fail("expected a value");
        char c = text_[pos_];
        if (c == '"') return string_literal();
        if (c != '[') return integer_literal();
        ++pos_;
        std::vector<std::string> strings;
        std::vector<long long> ints;
        while (true) {
            skip_blank(true);
            if (pos_ >= text_.size()) fail("unterminated array");
            if (text_[pos_] == ']') {
                ++pos_;
                break;
            }
            if (text_[pos_] == '"') {
                if (!ints.empty()) fail("mixed array");
                strings.push_back(string_literal());
            } else {
                if (!strings.empty()) fail("mixed array");
                ints.push_back(integer_literal());
            }
            skip_blank(true);
            if (pos_ < text_.size() && text_[pos_] == ',') ++pos_;
        }
        if (!ints.empty()) return ints;
        return strings;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

long long get_int(const ConfigDoc& doc, const std::string& key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw PreconditionError("missing key '" + key + "'");
    if (auto v = std::get_if<long long>(&it->second)) return *v;
    throw PreconditionError("key '" + key + "' must be an integer");
}

void reject_unknown(const ConfigDoc& doc, std::initializer_list<const char*> known) {
    for (const auto& [key, _] : doc) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw PreconditionError("unknown key '" + key + "'");
    }
}

}  // namespace

ConfigDoc parse_config(std::string_view text) { return ConfigReader(text).read(); }

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

FieldPtr field_from_config(const ConfigDoc& doc) {
    long long q = get_int(doc, "q");
    if (q < 2) throw PreconditionError("q must be >= 2");
    auto mod = doc.find("field_modulus");
    if (mod == doc.end()) {
        FieldPtr f = FieldPtr(FqField::of_order(static_cast<std::uint64_t>(q)));
        if (doc.count("p") && get_int(doc, "p") != f->p()) throw PreconditionError("p does not match q");
        return f;
    }
    long long p = doc.count("p") ? get_int(doc, "p") : 0;
    std::vector<std::uint32_t> coeffs;
    if (auto ints = std::get_if<std::vector<long long>>(&mod->second)) {
        for (long long c : *ints) {
            if (c < 0) throw PreconditionError("field_modulus coefficients must be nonnegative");
            coeffs.push_back(static_cast<std::uint32_t>(c));
        }
    } else {
        throw PreconditionError("field_modulus must be an integer array (low to high)");
    }
    if (p == 0) {
        p = 2;
        while (q % p != 0) ++p;
    }
    FieldPtr f = FqField::extension(static_cast<std::uint32_t>(p), coeffs);
    if (f->q() != static_cast<std::uint64_t>(q)) throw PreconditionError("field_modulus degree does not match q");
    return f;
}

DrinfeldModule module_from_config(const ConfigDoc& doc) {
    reject_unknown(doc, {"q", "p", "field_modulus", "coeffs", "name"});
    FieldPtr field = field_from_config(doc);
    auto it = doc.find("coeffs");
    if (it == doc.end()) throw PreconditionError("missing key 'coeffs'");
    auto strings = std::get_if<std::vector<std::string>>(&it->second);
    if (!strings) throw PreconditionError("coeffs must be an array of strings");
    std::vector<RationalFn> coeffs;
    for (const std::string& s : *strings) coeffs.push_back(parse_rational_fn(s, field));
    return DrinfeldModule(field, std::move(coeffs));
}

DrinfeldModule load_module(const std::string& spec) {
    static const std::regex carlitz(R"(\s*carlitz\s*\(\s*q\s*=\s*(\d+)\s*\)\s*)");
    std::smatch m;
    if (std::regex_match(spec, m, carlitz)) {
        return DrinfeldModule::carlitz(FqField::of_order(std::stoull(m[1].str())));
    }
    return module_from_config(parse_config(read_text_file(spec)));
}

APolyX point_from_config(const ConfigDoc& doc, const FieldPtr& field) {
    reject_unknown(doc, {"q", "p", "field_modulus", "minpoly", "name"});
    if (doc.count("q") && get_int(doc, "q") != field->q()) throw PreconditionError("point file q differs from the module's q");
    auto it = doc.find("minpoly");
    if (it == doc.end()) throw PreconditionError("missing key 'minpoly'");
    auto s = std::get_if<std::string>(&it->second);
    if (!s) throw PreconditionError("minpoly must be a string");
    return parse_apolyx(*s, field);
}

APolyX load_point(const std::string& spec, const FieldPtr& field) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(spec, ec)) return point_from_config(parse_config(read_text_file(spec)), field);
    return parse_apolyx(spec, field);
}

}  // namespace drinfeld
