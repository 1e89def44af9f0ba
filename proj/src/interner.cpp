#include "kgpart/interner.hpp"

#include <stdexcept>

namespace kgpart {

TermId TermInterner::intern(Term term) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = ids_.find(term);
    if (it != ids_.end()) return it->second;
    const TermId id = static_cast<TermId>(terms_.size());
    auto [pos, inserted] = ids_.emplace(std::move(term), id);
    (void)inserted;
    terms_.push_back(&pos->first);
    return id;
}

const Term& TermInterner::term(TermId id) const {
    std::lock_guard<std::mutex> lock(mutex_);
    if (id >= terms_.size()) throw std::out_of_range("unknown term id " + std::to_string(id));
    return *terms_[id];
}

std::size_t TermInterner::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return terms_.size();
}

std::size_t TermInterner::memory_footprint() const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto heap_bytes = [](const std::string& s) {
        return s.capacity() > sizeof(std::string) ? s.capacity() : 0;
    };
    std::size_t bytes = ids_.bucket_count() * sizeof(void*);
    for (const Term* t : terms_) {
        bytes += sizeof(Term) + sizeof(void*) * 3;  // node + id + back pointer, roughly
        bytes += heap_bytes(t->lexical) + heap_bytes(t->datatype) + heap_bytes(t->lang);
    }
    return bytes;
}

}  // namespace kgpart
