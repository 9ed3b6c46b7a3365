#include "raag/homology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace raag {

std::string FGAbelianGroup::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    if (free_rank > 0) {
        out << "Z";
        if (free_rank > 1) out << "^" << free_rank;
        first = false;
    }
    for (const Int& d : torsion) {
        if (!first) out << " + ";
        out << "Z/" << d;
        first = false;
    }
    return out.str();
}

IntegerChainComplex boundary_matrices(const FlagComplex& k, bool use_augmentation) {
    IntegerChainComplex cc;
    cc.augmented = use_augmentation;
    const int levels = k.level_count();
    cc.bases.resize(levels);
    for (int s = 0; s < levels; ++s) cc.bases[s] = k.level(s);
    if (!use_augmentation) cc.bases[0].clear();

    cc.boundary.resize(levels);
    for (int s = 1; s < levels; ++s) {
        const auto& domain = cc.bases[s];
        const auto& target = cc.bases[s - 1];
        IntMatrix d(static_cast<int>(target.size()), static_cast<int>(domain.size()));
        for (int c = 0; c < static_cast<int>(domain.size()); ++c) {
            const Simplex& simplex = domain[c];
            int sign = 1;
            for (size_t j = 0; j < simplex.verts.size(); ++j) {
                Simplex face;
                face.verts = simplex.verts;
                face.verts.erase(face.verts.begin() + j);
                auto it = std::lower_bound(target.begin(), target.end(), face);
                if (it != target.end() && *it == face)
                    d.at(static_cast<int>(it - target.begin()), c) += sign;
                sign = -sign;
            }
        }
        cc.boundary[s] = std::move(d);
    }
    return cc;
}

namespace {

// Rank of the level-s boundary map, zero when out of range.
int boundary_rank(const IntegerChainComplex& cc, int s) {
    if (s < 1 || s >= cc.level_count()) return 0;
    return smith_normal_form(cc.boundary[s]).rank;
}

FGAbelianGroup homology_at_level(const IntegerChainComplex& cc, int s) {
    FGAbelianGroup out;
    if (s < 0 || s >= cc.level_count()) return out;
    long long n = static_cast<long long>(cc.bases[s].size());
    int rank_out = boundary_rank(cc, s);
    std::vector<Int> incoming_torsion;
    int rank_in = 0;
    if (s + 1 < cc.level_count()) {
        auto snf = smith_normal_form(cc.boundary[s + 1]);
        rank_in = snf.rank;
        incoming_torsion = snf.nontrivial();
    }
    out.free_rank = n - rank_out - rank_in;
    out.torsion = std::move(incoming_torsion);
    return out;
}

}  // namespace

FGAbelianGroup reduced_homology(const FlagComplex& k, int degree) {
    IntegerChainComplex cc = boundary_matrices(k, true);
    return homology_at_level(cc, degree + 1);
}

FGAbelianGroup reduced_cohomology(const FlagComplex& k, int degree) {
    IntegerChainComplex cc = boundary_matrices(k, true);
    const int s = degree + 1;
    FGAbelianGroup out;
    if (s < 0 || s >= cc.level_count()) return out;
    long long n = static_cast<long long>(cc.bases[s].size());
    // Coboundary from level s is the transpose of the level-(s+1) boundary.
    int rank_out = 0;
    if (s + 1 < cc.level_count()) rank_out = smith_normal_form(cc.boundary[s + 1].transpose()).rank;
    int rank_in = 0;
    std::vector<Int> torsion;
    if (s >= 1) {
        auto snf = smith_normal_form(cc.boundary[s].transpose());
        rank_in = snf.rank;
        torsion = snf.nontrivial();
    }
    out.free_rank = n - rank_out - rank_in;
    out.torsion = std::move(torsion);
    return out;
}

std::vector<long long> betti_numbers(const IntegerChainComplex& cc) {
    std::vector<long long> out;
    for (int s = 0; s < cc.level_count(); ++s) {
        long long n = static_cast<long long>(cc.bases[s].size());
        int rank_out = boundary_rank(cc, s);
        int rank_in = boundary_rank(cc, s + 1);
        out.push_back(n - rank_out - rank_in);
    }
    return out;
}

long long euler_characteristic(const FlagComplex& k) {
    if (k.size_nonempty() == 0)
        throw std::invalid_argument("euler_characteristic: empty complex");
    long long chi = 0;
    int sign = 1;
    for (int s = 1; s < k.level_count(); ++s) {
        chi += sign * static_cast<long long>(k.level(s).size());
        sign = -sign;
    }
    return chi;
}

}  // namespace raag
