#pragma once

// Append-only set of byte strings with open addressing over a contiguous pool.
// Memory per element is the key bytes plus ~12 bytes of index overhead, which
// keeps multi-million-element closures well under the enumeration memory
// budget.

#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>
#include <vector>

namespace pcalg {

class KeyPool {
public:
    KeyPool() { table_.assign(kInitialSlots, kEmpty); }

    size_t size() const { return offsets_.size(); }

    std::string_view get(size_t idx) const {
        uint64_t beg = offsets_[idx];
        uint64_t end = idx + 1 < offsets_.size() ? offsets_[idx + 1] : pool_.size();
        return std::string_view(pool_.data() + beg, end - beg);
    }

    bool contains(std::string_view key) const { return find(key) != kNotFound; }

    size_t find(std::string_view key) const {
        uint64_t h = hash(key);
        size_t mask = table_.size() - 1;
        size_t slot = static_cast<size_t>(h) & mask;
        while (table_[slot] != kEmpty) {
            if (get(table_[slot]) == key) return table_[slot];
            slot = (slot + 1) & mask;
        }
        return kNotFound;
    }

    // returns (index, inserted)
    std::pair<size_t, bool> insert(std::string_view key) {
        if (2 * (offsets_.size() + 1) > table_.size()) grow();
        uint64_t h = hash(key);
        size_t mask = table_.size() - 1;
        size_t slot = static_cast<size_t>(h) & mask;
        while (table_[slot] != kEmpty) {
            if (get(table_[slot]) == key) return {table_[slot], false};
            slot = (slot + 1) & mask;
        }
        size_t idx = offsets_.size();
        offsets_.push_back(pool_.size());
        pool_.insert(pool_.end(), key.begin(), key.end());
        table_[slot] = static_cast<uint64_t>(idx);
        return {idx, true};
    }

    size_t memory_bytes() const {
        return pool_.capacity() + offsets_.capacity() * sizeof(uint64_t) +
               table_.capacity() * sizeof(uint64_t);
    }

    static constexpr size_t kNotFound = static_cast<size_t>(-1);

private:
    static constexpr uint64_t kEmpty = ~0ull;
    static constexpr size_t kInitialSlots = 1 << 10;

    static uint64_t hash(std::string_view s) {
        uint64_t h = 1469598103934665603ull;  // FNV-1a
        for (char c : s) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ull;
        }
        return h | 1;  // never 0, irrelevant but cheap
    }

    void grow() {
        std::vector<uint64_t> bigger(table_.size() * 2, kEmpty);
        size_t mask = bigger.size() - 1;
        for (uint64_t idx : table_) {
            if (idx == kEmpty) continue;
            uint64_t h = hash(get(idx));
            size_t slot = static_cast<size_t>(h) & mask;
            while (bigger[slot] != kEmpty) slot = (slot + 1) & mask;
            bigger[slot] = idx;
        }
        table_ = std::move(bigger);
    }

    std::vector<char> pool_;
    std::vector<uint64_t> offsets_;
    std::vector<uint64_t> table_;
};

}  // namespace pcalg
