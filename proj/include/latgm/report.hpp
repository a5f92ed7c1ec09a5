#pragma once

#include <string>
#include <vector>

namespace latgm {

/// Outcome of a verification run: a list of failed checks (expected empty)
/// plus informational notes. Entries are appended in a deterministic order,
/// so reports from equal seeds compare byte-for-byte.
struct Report {
    struct Entry {
        std::string check;
        std::string detail;
    };

    std::vector<Entry> failures;
    std::vector<Entry> notes;

    bool ok() const { return failures.empty(); }

    void fail(std::string check, std::string detail) {
        failures.push_back({std::move(check), std::move(detail)});
    }
    void note(std::string check, std::string detail) {
        notes.push_back({std::move(check), std::move(detail)});
    }

    void merge(const Report& other, const std::string& prefix) {
        for (const auto& e : other.failures) failures.push_back({prefix + e.check, e.detail});
        for (const auto& e : other.notes) notes.push_back({prefix + e.check, e.detail});
    }

    std::string to_text() const {
        std::string out;
        if (failures.empty()) {
            out += "ok: no failures\n";
        } else {
            out += "FAILURES (" + std::to_string(failures.size()) + "):\n";
            for (const auto& e : failures) out += "  " + e.check + ": " + e.detail + "\n";
        }
        for (const auto& e : notes) out += "note: " + e.check + ": " + e.detail + "\n";
        return out;
    }
};

} // namespace latgm
