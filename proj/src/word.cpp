#include "pvk/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pvk {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!valid_name(names_[i]))
            throw std::invalid_argument("invalid generator name '" + names_[i] + "'");
        if (!lookup_.emplace(names_[i], i).second)
            throw std::invalid_argument("duplicate generator name '" + names_[i] + "'");
    }
}

AlphabetPtr Alphabet::make(std::vector<std::string> names) {
    return AlphabetPtr(new Alphabet(std::move(names)));
}

bool Alphabet::valid_name(std::string_view name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
        return false;
    return std::all_of(name.begin(), name.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; });
}

std::size_t Alphabet::index(std::string_view name) const {
    auto it = lookup_.find(std::string(name));
    if (it == lookup_.end())
        throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
    return it->second;
}

bool Alphabet::contains(std::string_view name) const {
    return lookup_.count(std::string(name)) != 0;
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return *a == *b;
}

namespace {
void require_same(const Word& a, const Word& b) {
    if (!same_alphabet(a.alphabet(), b.alphabet()))
        throw std::invalid_argument("alphabet mismatch");
}
} // namespace

void Word::append_reduced(const Letter& l) {
    if (!letters_.empty() && letters_.back() == l.inverse())
        letters_.pop_back();
    else
        letters_.push_back(l);
}

Word Word::reduce(AlphabetPtr alphabet, std::span<const Letter> letters) {
    Word w(std::move(alphabet));
    const std::size_t n = w.alphabet_ ? w.alphabet_->size() : 0;
    w.letters_.reserve(letters.size());
    for (const Letter& l : letters) {
        if (l.gen >= n)
            throw std::invalid_argument("letter outside alphabet");
        w.append_reduced(l);
    }
    return w;
}

Word Word::from_powers(AlphabetPtr alphabet,
                       const std::vector<std::pair<std::string, long>>& powers) {
    Word w(alphabet);
    for (const auto& [name, e] : powers)
        w *= generator(alphabet, name, e);
    return w;
}

Word Word::generator(AlphabetPtr alphabet, std::size_t g, long exponent) {
    if (g >= alphabet->size())
        throw std::invalid_argument("generator index out of range");
    Word w(std::move(alphabet));
    Letter l{static_cast<std::uint32_t>(g), exponent < 0};
    for (long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k)
        w.letters_.push_back(l);
    return w;
}

Word Word::generator(AlphabetPtr alphabet, std::string_view name, long exponent) {
    const std::size_t g = alphabet->index(name);
    return generator(std::move(alphabet), g, exponent);
}

Word Word::inverse() const {
    Word w(alphabet_);
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back(it->inverse());
    return w;
}

Word Word::pow(long k) const {
    Word base = k < 0 ? inverse() : *this;
    Word r(alphabet_);
    for (long i = 0; i < (k < 0 ? -k : k); ++i)
        r *= base;
    return r;
}

Word Word::cyclic_core() const {
    std::size_t lo = 0, hi = letters_.size();
    while (hi - lo >= 2 && letters_[lo] == letters_[hi - 1].inverse()) {
        ++lo;
        --hi;
    }
    Word w(alphabet_);
    w.letters_.assign(letters_.begin() + static_cast<long>(lo), letters_.begin() + static_cast<long>(hi));
    return w;
}

std::vector<long> Word::exponent_sums() const {
    std::vector<long> sums(alphabet_ ? alphabet_->size() : 0, 0);
    for (const Letter& l : letters_)
        sums[l.gen] += l.sign();
    return sums;
}

Word Word::operator*(const Word& rhs) const {
    Word w = *this;
    w *= rhs;
    return w;
}

Word& Word::operator*=(const Word& rhs) {
    if (!alphabet_)
        alphabet_ = rhs.alphabet_;
    else if (rhs.alphabet_)
        require_same(*this, rhs);
    for (const Letter& l : rhs.letters_)
        append_reduced(l);
    return *this;
}

bool Word::operator==(const Word& other) const {
    return letters_ == other.letters_ && same_alphabet(alphabet_, other.alphabet_);
}

bool Word::shortlex_less(const Word& other) const {
    if (letters_.size() != other.letters_.size())
        return letters_.size() < other.letters_.size();
    return letters_ < other.letters_;
}

std::string Word::to_string() const {
    if (letters_.empty())
        return "1";
    std::ostringstream out;
    std::size_t i = 0;
    bool first = true;
    while (i < letters_.size()) {
        std::size_t j = i;
        while (j < letters_.size() && letters_[j] == letters_[i])
            ++j;
        const long run = static_cast<long>(j - i) * letters_[i].sign();
        if (!first)
            out << ' ';
        first = false;
        out << alphabet_->name(letters_[i].gen);
        if (run != 1)
            out << '^' << run;
        i = j;
    }
    return out.str();
}

Word commutator(const Word& x, const Word& y) {
    require_same(x, y);
    return x.inverse() * y.inverse() * x * y;
}

Word conjugate(const Word& y, const Word& x) {
    require_same(x, y);
    return x.inverse() * y * x;
}

GenMap::GenMap(AlphabetPtr source, AlphabetPtr target, std::vector<Word> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_->size())
        throw std::invalid_argument("GenMap needs one image per source generator");
    for (Word& w : images_) {
        if (!w.alphabet())
            w = Word(target_);
        else if (!same_alphabet(w.alphabet(), target_))
            throw std::invalid_argument("GenMap image not over the target alphabet");
    }
}

GenMap GenMap::identity(const AlphabetPtr& alphabet) {
    std::vector<Word> images;
    for (std::size_t g = 0; g < alphabet->size(); ++g)
        images.push_back(Word::generator(alphabet, g));
    return GenMap(alphabet, alphabet, std::move(images));
}

Word GenMap::apply(const Word& w) const {
    if (!same_alphabet(w.alphabet(), source_))
        throw std::invalid_argument("alphabet mismatch");
    Word r(target_);
    for (const Letter& l : w.letters())
        r *= l.inverted ? images_[l.gen].inverse() : images_[l.gen];
    return r;
}

GenMap GenMap::then(const GenMap& next) const {
    if (!same_alphabet(target_, next.source_))
        throw std::invalid_argument("alphabet mismatch");
    std::vector<Word> images;
    images.reserve(images_.size());
    for (const Word& w : images_)
        images.push_back(next.apply(w));
    return GenMap(source_, next.target_, std::move(images));
}

Word substitute(const Word& w, const GenMap& m) { return m.apply(w); }

} // namespace pvk
