#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "earspan/ears.hpp"

namespace earspan {

// Collects one JSON object per pipeline event, written out as JSON lines.
// Key order is pinned so traces are byte-stable across runs.
class trace_log {
  public:
    trace_log() = default;
    static trace_log off() { return trace_log(); }
    static trace_log on() {
        trace_log t;
        t.enabled_ = true;
        return t;
    }

    bool enabled() const { return enabled_; }

    void snapshot(const std::string& phase, const ear_decomposition& d) {
        if (!enabled_) return;
        nlohmann::ordered_json j;
        j["phase"] = phase;
        j["root"] = d.root;
        j["ears"] = ears_to_json(d.ears);
        lines_.push_back(std::move(j));
    }

    void evenmin(bool certified, int evens, const ear_decomposition& d) {
        if (!enabled_) return;
        nlohmann::ordered_json j;
        j["phase"] = "evenmin";
        j["certified"] = certified;
        j["evens"] = evens;
        j["root"] = d.root;
        j["ears"] = ears_to_json(d.ears);
        lines_.push_back(std::move(j));
    }

    // One line per rewrite step: the case label, the ears the step consumed
    // (as they were before the rewrite), and the even-ear count afterwards.
    void step(const std::string& phase, int iter, const std::string& label,
              const std::vector<ear>& touched, int evens_after) {
        if (!enabled_) return;
        nlohmann::ordered_json j;
        j["phase"] = phase;
        j["iter"] = iter;
        j["case"] = label;
        j["ears"] = ears_to_json(touched);
        j["evens"] = evens_after;
        lines_.push_back(std::move(j));
    }

    const std::vector<nlohmann::ordered_json>& lines() const { return lines_; }

    void write(std::ostream& os) const {
        for (const auto& j : lines_) os << j.dump() << "\n";
    }

    std::string dump() const {
        std::string s;
        for (const auto& j : lines_) {
            s += j.dump();
            s += "\n";
        }
        return s;
    }

  private:
    bool enabled_ = false;
    std::vector<nlohmann::ordered_json> lines_;
};

}  // namespace earspan
