#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blaschke/poly.hpp"

namespace blaschke {

enum class Family { disk, cluster, circle };

struct InstanceSpec {
    Family family = Family::disk;
    int n = 1;
    double r = 0.99;  // ignored by the cluster family
    std::uint64_t seed = 0;
};

/// n points uniform by area in the disk of radius r, 0 < r <= 1; points are
/// kept distinct, nonzero and strictly inside the unit disk by resampling.
std::vector<Complex> gen_disk(int n, double r, std::uint64_t seed);

/// Cluster (1+i)/3 + (N(0,1) + i N(0,1))/4 with rejection outside the disk.
std::vector<Complex> gen_cluster(int n, std::uint64_t seed);

/// Angles 2 pi k/n jittered uniformly by at most pi/(4n), fixed radius r.
std::vector<Complex> gen_circle(int n, double r, std::uint64_t seed);

std::vector<Complex> generate(const InstanceSpec& spec);

std::string family_name(Family family);
Family family_from_name(const std::string& name);

}  // namespace blaschke
