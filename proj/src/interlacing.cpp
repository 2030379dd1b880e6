/*
   Copyright 2026 The interlace authors

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

#include "interlace/interlacing.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

namespace interlace {

namespace {

struct Entry {
    double value;
    int set;  // 0 first argument, 1 second
    Eigen::Index index;
};

std::pair<Eigen::Index, Eigen::Index> as_pair(const Entry& a, const Entry& b) {
    return a.set == 0 ? std::make_pair(a.index, b.index) : std::make_pair(b.index, a.index);
}

/// Strict increase of an already-woven sequence; `success` on pass.
InterlacingVerdict scan(const std::vector<Entry>& seq, VerdictKind success, double floor) {
    InterlacingVerdict v;
    v.floor = floor;
    std::optional<InterlacingVerdict> inconclusive;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        const double d = seq[i + 1].value - seq[i].value;
        if (d <= -floor) {
            v.kind = VerdictKind::Fail;
            v.witness = as_pair(seq[i], seq[i + 1]);
            return v;
        }
        if (std::abs(d) < floor && !inconclusive) {
            InterlacingVerdict inc = v;
            inc.kind = VerdictKind::Inconclusive;
            inc.witness = as_pair(seq[i], seq[i + 1]);
            inc.gap = std::abs(d);
            inconclusive = inc;
        }
    }
    if (inconclusive) return *inconclusive;
    v.kind = success;
    return v;
}

std::vector<Entry> weave(const Eigen::VectorXd& first, const Eigen::VectorXd& second) {
    std::vector<Entry> seq;
    seq.reserve(static_cast<std::size_t>(first.size() + second.size()));
    for (Eigen::Index i = 0; i < first.size(); ++i) {
        seq.push_back({first(i), 0, i});
        if (i < second.size()) seq.push_back({second(i), 1, i});
    }
    return seq;
}

void require_size(bool ok, const char* op, Eigen::Index a, Eigen::Index b) {
    if (!ok)
        throw InterlacingError(std::string(op) + ": size mismatch (" + std::to_string(a) + " vs " + std::to_string(b) +
                               ")");
}

/// Alternation in whichever orientation the smallest element suggests; witness indices
/// stay (zp, zg).
InterlacingVerdict alternate_either(const Eigen::VectorXd& zp, const Eigen::VectorXd& zg, double floor) {
    if (zp.size() == 0) {
        InterlacingVerdict v;
        v.kind = VerdictKind::Alternate;
        v.floor = floor;
        v.orientation = Orientation::PBelowG;
        return v;
    }
    if (zp(0) < zg(0)) {
        auto v = alternates(zp, zg, floor);
        v.orientation = Orientation::PBelowG;
        return v;
    }
    auto v = alternates(zg, zp, floor);
    if (v.witness) v.witness = std::make_pair(v.witness->second, v.witness->first);
    v.orientation = Orientation::GBelowP;
    return v;
}

} // namespace

std::string_view verdict_name(VerdictKind kind) {
    switch (kind) {
    case VerdictKind::Alternate: return "Alternate";
    case VerdictKind::InterlaceDown: return "InterlaceDown";
    case VerdictKind::AddedPointLeft: return "AddedPointLeft";
    case VerdictKind::AddedPointInterior: return "AddedPointInterior";
    case VerdictKind::AddedPointRight: return "AddedPointRight";
    case VerdictKind::FullInterlace: return "FullInterlace";
    case VerdictKind::Fail: return "Fail";
    case VerdictKind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string_view orientation_name(Orientation o) { return o == Orientation::PBelowG ? "P_below_G" : "G_below_P"; }

std::string InterlacingVerdict::describe() const {
    std::string out(verdict_name(kind));
    char buf[96];
    if (kind == VerdictKind::AddedPointInterior && e_slot) out += "(" + std::to_string(*e_slot) + ")";
    if (witness) {
        std::snprintf(buf, sizeof buf, " witness=(%ld,%ld)", static_cast<long>(witness->first),
                      static_cast<long>(witness->second));
        out += buf;
    }
    if (gap) {
        std::snprintf(buf, sizeof buf, " gap=%.3g", *gap);
        out += buf;
    }
    if (orientation) out += " " + std::string(orientation_name(*orientation));
    return out;
}

InterlacingVerdict alternates(const Eigen::VectorXd& zp, const Eigen::VectorXd& zq, double floor) {
    require_size(zp.size() == zq.size(), "alternates", zp.size(), zq.size());
    return scan(weave(zp, zq), VerdictKind::Alternate, floor);
}

InterlacingVerdict interlaces_down(const Eigen::VectorXd& zp, const Eigen::VectorXd& zq, double floor) {
    require_size(zp.size() == zq.size() + 1, "interlaces_down", zp.size(), zq.size());
    return scan(weave(zp, zq), VerdictKind::InterlaceDown, floor);
}

InterlacingVerdict full_interlace(const Eigen::VectorXd& zp, const Eigen::VectorXd& zg, double floor) {
    InterlacingVerdict v;
    if (zg.size() == zp.size() + 1) {
        v = interlaces_down(zg, zp, floor);
        if (v.witness) v.witness = std::make_pair(v.witness->second, v.witness->first);
        v.orientation = Orientation::GBelowP;
    } else {
        require_size(zg.size() == zp.size(), "full_interlace", zp.size(), zg.size());
        v = alternate_either(zp, zg, floor);
    }
    if (v.holds()) {
        v.kind = VerdictKind::FullInterlace;
        v.full_orientation = v.orientation;
    }
    return v;
}

InterlacingVerdict added_point_interlace(const Eigen::VectorXd& zp, double e, const Eigen::VectorXd& zg,
                                         double floor) {
    require_size(zg.size() == zp.size() + 1 || zg.size() == zp.size(), "added_point_interlace", zp.size(),
                 zg.size());
    for (Eigen::Index k = 0; k < zg.size(); ++k)
        if (std::abs(e - zg(k)) < floor) {
            char buf[128];
            std::snprintf(buf, sizeof buf, "added point E=%.17g coincides with zero %ld of G (%.17g)", e,
                          static_cast<long>(k), zg(k));
            throw InterlacingError(buf);
        }

    Eigen::VectorXd merged(zp.size() + 1);
    merged.head(zp.size()) = zp;
    merged(zp.size()) = e;
    std::sort(merged.begin(), merged.end());

    InterlacingVerdict v;
    if (zg.size() == merged.size()) {
        v = alternate_either(merged, zg, floor);
    } else {
        v = interlaces_down(merged, zg, floor);
        v.orientation = Orientation::PBelowG;
    }
    v.e_used = e;
    v.e_slot = count_below(zg, e);
    if (!v.holds()) return v;

    if (*v.e_slot == 0)
        v.kind = VerdictKind::AddedPointLeft;
    else if (*v.e_slot == zg.size())
        v.kind = VerdictKind::AddedPointRight;
    else
        v.kind = VerdictKind::AddedPointInterior;
    if (const auto full = full_interlace(zp, zg, floor); full.holds()) v.full_orientation = full.full_orientation;
    return v;
}

double min_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < a.size(); ++i)
        for (Eigen::Index j = 0; j < b.size(); ++j) best = std::min(best, std::abs(a(i) - b(j)));
    return best;
}

Eigen::Index count_below(const Eigen::VectorXd& zeros, double x) {
    return static_cast<Eigen::Index>(std::count_if(zeros.begin(), zeros.end(), [x](double z) { return z < x; }));
}

} // namespace interlace
