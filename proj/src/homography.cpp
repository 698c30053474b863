#include "crowdtraits/homography.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "crowdtraits/errors.hpp"

namespace crowdtraits {

namespace {

// Similarity transform taking the points to centroid 0 and mean distance
// sqrt(2). Returns (T, transformed points).
Eigen::Matrix3d normalize_points(const std::vector<Point2>& pts,
                                 std::vector<Point2>& out) {
    double cx = 0, cy = 0;
    for (const auto& p : pts) {
        cx += p.x;
        cy += p.y;
    }
    cx /= static_cast<double>(pts.size());
    cy /= static_cast<double>(pts.size());

    double mean_dist = 0;
    for (const auto& p : pts) {
        mean_dist += std::hypot(p.x - cx, p.y - cy);
    }
    mean_dist /= static_cast<double>(pts.size());
    const double scale = mean_dist > 1e-12 ? std::sqrt(2.0) / mean_dist : 1.0;

    out.resize(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out[i].x = (pts[i].x - cx) * scale;
        out[i].y = (pts[i].y - cy) * scale;
    }

    Eigen::Matrix3d t;
    t << scale, 0, -scale * cx, 0, scale, -scale * cy, 0, 0, 1;
    return t;
}

}  // namespace

Homography estimate_homography(const std::vector<Correspondence>& correspondences) {
    const std::size_t n = correspondences.size();
    if (n < 4) {
        throw InsufficientDataError("homography estimation needs at least 4 correspondences, got " +
                                    std::to_string(n));
    }

    std::vector<Point2> img(n), wld(n);
    for (std::size_t i = 0; i < n; ++i) {
        img[i] = correspondences[i].image;
        wld[i] = correspondences[i].world;
    }

    std::vector<Point2> img_n, wld_n;
    const Eigen::Matrix3d t_img = normalize_points(img, img_n);
    const Eigen::Matrix3d t_wld = normalize_points(wld, wld_n);

    // Two rows per correspondence of the standard DLT system A h = 0.
    Eigen::MatrixXd a(2 * n, 9);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = img_n[i].x, y = img_n[i].y;
        const double u = wld_n[i].x, v = wld_n[i].y;
        a.row(2 * i) << -x, -y, -1, 0, 0, 0, x * u, y * u, u;
        a.row(2 * i + 1) << 0, 0, 0, -x, -y, -1, x * v, y * v, v;
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
    const Eigen::VectorXd h = svd.matrixV().col(8);

    Eigen::Matrix3d hn;
    hn << h(0), h(1), h(2), h(3), h(4), h(5), h(6), h(7), h(8);
    Eigen::Matrix3d full = t_wld.inverse() * hn * t_img;

    if (std::abs(full.determinant()) < 1e-10 * std::pow(full.norm(), 3)) {
        throw SingularSystemError("degenerate correspondence configuration (singular homography)");
    }

    // Scale so the bottom-right entry is 1 when it is nonzero; otherwise fix
    // the sign via the largest-magnitude entry.
    if (std::abs(full(2, 2)) > 1e-12 * full.norm()) {
        full /= full(2, 2);
    } else {
        double pivot = 0.0;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                if (std::abs(full(r, c)) > std::abs(pivot)) pivot = full(r, c);
        full /= pivot;
    }

    Homography result;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) result.at(r, c) = full(r, c);
    return result;
}

Point2 apply_homography(const Homography& h, const Point2& p) {
    const double w = h.at(2, 0) * p.x + h.at(2, 1) * p.y + h.at(2, 2);
    if (std::abs(w) < 1e-15) {
        throw PointAtInfinityError("point maps to infinity under homography");
    }
    return {(h.at(0, 0) * p.x + h.at(0, 1) * p.y + h.at(0, 2)) / w,
            (h.at(1, 0) * p.x + h.at(1, 1) * p.y + h.at(1, 2)) / w};
}

double max_reprojection_error(const Homography& h,
                              const std::vector<Correspondence>& correspondences) {
    double worst = 0.0;
    for (const auto& c : correspondences) {
        const Point2 mapped = apply_homography(h, c.image);
        worst = std::max(worst, distance(mapped, c.world));
    }
    return worst;
}

double determinant(const Homography& h) {
    const auto& m = h.m;
    return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
           m[2] * (m[3] * m[7] - m[4] * m[6]);
}

}  // namespace crowdtraits
