#pragma once

#include <array>
#include <utility>
#include <vector>

#include "crowdtraits/types.hpp"

namespace crowdtraits {

/// 3x3 projective map from one plane to another, defined up to scale.
/// Normalized so the bottom-right entry is 1 whenever it is nonzero.
struct Homography {
    // Row-major: m[r * 3 + c].
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

    double at(int row, int col) const { return m[row * 3 + col]; }
    double& at(int row, int col) { return m[row * 3 + col]; }

    static Homography identity() { return {}; }
};

struct Correspondence {
    Point2 image;
    Point2 world;
};

/// Direct linear transform over >= 4 correspondences, with centroid/scale
/// pre-normalization of both point sets for conditioning.
/// Throws InsufficientDataError (< 4 points) or SingularSystemError
/// (degenerate configuration, e.g. collinear points).
Homography estimate_homography(const std::vector<Correspondence>& correspondences);

/// Perspective-divided image of p under h.
/// Throws PointAtInfinityError when the homogeneous third coordinate vanishes.
Point2 apply_homography(const Homography& h, const Point2& p);

/// Largest distance between h(image point) and its world point.
double max_reprojection_error(const Homography& h,
                              const std::vector<Correspondence>& correspondences);

double determinant(const Homography& h);

}  // namespace crowdtraits
