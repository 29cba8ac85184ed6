#include "hopf/basis.hpp"

#include <cctype>

#include "hopf/util.hpp"

namespace hopf {

BasisId BasisId::tuple(std::vector<BasisId> parts) {
    if (parts.empty()) fail(Error::Kind::Domain, "empty basis tuple");
    BasisId id;
    id.parts_ = std::move(parts);
    return id;
}

BasisId BasisId::pair(BasisId left, BasisId right) {
    return tuple({std::move(left), std::move(right)});
}

bool BasisId::operator<(const BasisId& o) const {
    if (parts_.empty() != o.parts_.empty()) return parts_.empty();
    if (parts_.empty()) {
        if (name_ != o.name_) return name_ < o.name_;
        return index_ < o.index_;
    }
    return parts_ < o.parts_;
}

std::string BasisId::to_string() const {
    if (is_tuple()) {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += parts_[i].to_string();
        }
        return s + ")";
    }
    std::string s = name_;
    if (!index_.empty()) {
        s += "[";
        for (std::size_t i = 0; i < index_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(index_[i]);
        }
        s += "]";
    }
    return s;
}

namespace {

class IdParser {
public:
    explicit IdParser(std::string_view t) : text_(t) {}

    BasisId parse() {
        BasisId id = node();
        if (pos_ != text_.size()) fail(Error::Kind::Parse, "trailing characters in basis id: " + std::string(text_));
        return id;
    }

private:
    BasisId node() {
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            std::vector<BasisId> parts;
            parts.push_back(node());
            while (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                parts.push_back(node());
            }
            if (pos_ >= text_.size() || text_[pos_] != ')')
                fail(Error::Kind::Parse, "missing ')' in basis id: " + std::string(text_));
            ++pos_;
            return BasisId::tuple(std::move(parts));
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != '[' && text_[pos_] != ',' && text_[pos_] != ')' &&
               text_[pos_] != '(')
            ++pos_;
        if (start == pos_) fail(Error::Kind::Parse, "empty basis id in: " + std::string(text_));
        std::string name(text_.substr(start, pos_ - start));
        std::vector<long> index;
        if (pos_ < text_.size() && text_[pos_] == '[') {
            ++pos_;
            for (;;) {
                std::size_t s = pos_;
                if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
                if (s == pos_) fail(Error::Kind::Parse, "bad index in basis id: " + std::string(text_));
                index.push_back(std::strtol(std::string(text_.substr(s, pos_ - s)).c_str(), nullptr, 10));
                if (pos_ < text_.size() && text_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                break;
            }
            if (pos_ >= text_.size() || text_[pos_] != ']')
                fail(Error::Kind::Parse, "missing ']' in basis id: " + std::string(text_));
            ++pos_;
        }
        return BasisId(std::move(name), std::move(index));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

BasisId BasisId::parse(std::string_view text) { return IdParser(text).parse(); }

}  // namespace hopf
