#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "crowdtraits/homography.hpp"
#include "crowdtraits/types.hpp"

namespace crowdtraits {

/// Reads the trajectory CSV contract: header `person_id,frame,x,y`, one row
/// per (person, frame), '.' decimal point. Rows may arrive in any order;
/// output trajectories are sorted by person id with frame-sorted samples.
/// Throws ParseError (naming the line) or DuplicateSampleError.
SceneDataset parse_trajectories(std::istream& source);
SceneDataset parse_trajectories(const std::string& csv_text);

/// Inverse of parse_trajectories up to row order: emits the same
/// (id, frame, x, y) multiset with round-trip-exact numeric formatting.
std::string serialize_trajectories(const SceneDataset& dataset);

/// Reads the correspondence CSV contract: header `img_x,img_y,world_x,world_y`.
std::vector<Correspondence> parse_correspondences(std::istream& source);
std::vector<Correspondence> parse_correspondences(const std::string& csv_text);

/// Applies the JSON metadata sidecar
/// `{"frame_rate": <real>, "units": "image_pixels"|"world_meters", "label": <string>}`
/// onto a parsed dataset. Missing keys keep the dataset's current values.
void apply_metadata_json(SceneDataset& dataset, const std::string& json_text);
std::string metadata_json(const SceneDataset& dataset);

/// Maps every sample through h and flips units to world_meters.
SceneDataset rectify(const SceneDataset& dataset, const Homography& h);

// File-level conveniences used by the CLI. Throw IoError with path context.
SceneDataset load_dataset(const std::string& csv_path, const std::string& meta_path = "");
void save_dataset(const SceneDataset& dataset, const std::string& csv_path,
                  const std::string& meta_path = "");

}  // namespace crowdtraits
