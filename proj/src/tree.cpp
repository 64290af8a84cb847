#include "effbayes/tree.hpp"

#include "effbayes/errors.hpp"

namespace effbayes {

std::string to_string(const SampleString& s) {
    std::string out = "(";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + ")";
}

bool is_prefix(const SampleString& p, const SampleString& s) {
    if (p.size() > s.size()) return false;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != s[i]) return false;
    return true;
}

std::shared_ptr<const SampleTree> SampleTree::cantor() {
    return std::shared_ptr<const SampleTree>(new SampleTree(Kind::Cantor));
}

std::shared_ptr<const SampleTree> SampleTree::baire() {
    return std::shared_ptr<const SampleTree>(new SampleTree(Kind::Baire));
}

std::shared_ptr<const SampleTree> SampleTree::custom(std::function<std::vector<Symbol>(const SampleString&)> kids) {
    auto t = new SampleTree(Kind::Custom);
    t->kids_ = std::move(kids);
    return std::shared_ptr<const SampleTree>(t);
}

std::shared_ptr<const SampleTree> SampleTree::extended(std::shared_ptr<const SampleTree> base) {
    auto t = new SampleTree(Kind::Extended);
    t->base_ = std::move(base);
    return std::shared_ptr<const SampleTree>(t);
}

bool SampleTree::contains(const SampleString& sigma) const {
    switch (kind_) {
        case Kind::Cantor:
            for (Symbol s : sigma)
                if (s > 1) return false;
            return true;
        case Kind::Baire:
            return true;
        case Kind::Custom: {
            SampleString prefix;
            for (Symbol s : sigma) {
                auto kids = kids_(prefix);
                if (kids.empty()) throw Error("custom tree has a dead end at " + to_string(prefix));
                bool ok = false;
                for (Symbol k : kids) ok = ok || (k == s);
                if (!ok) return false;
                prefix.push_back(s);
            }
            return true;
        }
        case Kind::Extended: {
            if (sigma.empty()) return true;
            SampleString rest(sigma.begin() + 1, sigma.end());
            return base_->contains(rest);
        }
    }
    return false;
}

std::optional<std::vector<Symbol>> SampleTree::children(const SampleString& sigma) const {
    switch (kind_) {
        case Kind::Cantor:
            return std::vector<Symbol>{0, 1};
        case Kind::Baire:
            return std::nullopt;
        case Kind::Custom: {
            auto kids = kids_(sigma);
            if (kids.empty()) throw Error("custom tree has a dead end at " + to_string(sigma));
            return kids;
        }
        case Kind::Extended: {
            if (sigma.empty()) return std::nullopt;  // countably many copies
            SampleString rest(sigma.begin() + 1, sigma.end());
            return base_->children(rest);
        }
    }
    return std::nullopt;
}

}  // namespace effbayes
