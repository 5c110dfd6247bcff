#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "nwd/annotations.hpp"
#include "nwd/box.hpp"
#include "nwd/errors.hpp"
#include "nwd/nms.hpp"

namespace nwd {

namespace detail {

inline nlohmann::json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open file: " + path);
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw DataError("malformed JSON in " + path + ": " + e.what());
    }
}

template <typename T>
T require_field(const nlohmann::json& obj, const char* key, const std::string& record) {
    if (!obj.contains(key)) {
        throw DataError(record + ": missing key \"" + key + "\"");
    }
    try {
        return obj.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw DataError(record + ": key \"" + key + "\" has the wrong type");
    }
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError("cannot write file: " + path);
    }
    out << text;
}

} // namespace detail

/// Loads a COCO-format annotation file. The corner-origin [x, y, w, h] bbox
/// convention is converted to center-size exactly once, here. Images keep
/// file order; each image's gts keep annotation file order. With
/// `clip_to_image` boxes are clamped to [0, W] x [0, H] first; a box that
/// degenerates under clipping (or has nonpositive size) is an error naming
/// the offending record.
inline std::vector<AnnotatedImage> load_coco(const std::string& path,
                                             bool clip_to_image = false) {
    const nlohmann::json root = detail::parse_json_file(path);
    if (!root.is_object() || !root.contains("images") || !root.contains("annotations")) {
        throw DataError(path + ": expected a COCO object with \"images\" and \"annotations\"");
    }

    std::vector<AnnotatedImage> images;
    std::map<long long, std::size_t> index_by_id;
    std::size_t image_index = 0;
    for (const auto& node : root.at("images")) {
        const std::string record = "image at index " + std::to_string(image_index);
        AnnotatedImage image;
        image.image_id = detail::require_field<long long>(node, "id", record);
        image.width = detail::require_field<int>(node, "width", record);
        image.height = detail::require_field<int>(node, "height", record);
        if (image.width <= 0 || image.height <= 0) {
            throw DataError(record + ": nonpositive image dimensions");
        }
        if (index_by_id.contains(image.image_id)) {
            throw DataError(record + ": duplicate image id " + std::to_string(image.image_id));
        }
        index_by_id[image.image_id] = images.size();
        images.push_back(std::move(image));
        ++image_index;
    }

    std::size_t ann_index = 0;
    for (const auto& node : root.at("annotations")) {
        const std::string record = "annotation at index " + std::to_string(ann_index);
        const long long image_id = detail::require_field<long long>(node, "image_id", record);
        const int category = detail::require_field<int>(node, "category_id", record);
        const auto bbox = detail::require_field<std::vector<double>>(node, "bbox", record);
        if (bbox.size() != 4) {
            throw DataError(record + ": bbox must have 4 entries [x, y, w, h]");
        }
        const auto it = index_by_id.find(image_id);
        if (it == index_by_id.end()) {
            throw DataError(record + ": unknown image_id " + std::to_string(image_id));
        }
        AnnotatedImage& image = images[it->second];

        double x1 = bbox[0], y1 = bbox[1];
        double x2 = bbox[0] + bbox[2], y2 = bbox[1] + bbox[3];
        if (clip_to_image) {
            x1 = std::max(x1, 0.0);
            y1 = std::max(y1, 0.0);
            x2 = std::min(x2, static_cast<double>(image.width));
            y2 = std::min(y2, static_cast<double>(image.height));
        }
        if (!(x2 > x1) || !(y2 > y1)) {
            throw DataError(record + ": bbox has nonpositive size" +
                            (clip_to_image ? " after clipping" : ""));
        }
        image.gts.push_back({BoundingBox::from_corners(x1, y1, x2, y2), category});
        ++ann_index;
    }
    return images;
}

/// Writes annotations back out as normalized COCO JSON (sorted keys,
/// sequential annotation ids, categories collected from the data). Loading
/// the result and saving again is byte-stable.
inline void save_coco(const std::string& path, const std::vector<AnnotatedImage>& images) {
    nlohmann::json root;
    root["images"] = nlohmann::json::array();
    root["annotations"] = nlohmann::json::array();
    root["categories"] = nlohmann::json::array();

    std::set<int> categories;
    long long next_ann_id = 1;
    for (const auto& image : images) {
        root["images"].push_back({{"id", image.image_id},
                                  {"width", image.width},
                                  {"height", image.height}});
        for (const auto& gt : image.gts) {
            categories.insert(gt.category);
            root["annotations"].push_back({{"id", next_ann_id++},
                                           {"image_id", image.image_id},
                                           {"category_id", gt.category},
                                           {"bbox", {gt.box.x1(), gt.box.y1(), gt.box.w, gt.box.h}},
                                           {"area", gt.box.area()},
                                           {"iscrowd", 0}});
        }
    }
    for (int category : categories) {
        root["categories"].push_back(
            {{"id", category}, {"name", "category_" + std::to_string(category)}});
    }
    detail::write_text_file(path, root.dump(2) + "\n");
}

/// One detection record from a detection file.
struct DetectionRecord {
    long long image_id = 0;
    Detection detection{BoundingBox(0.0, 0.0, 1.0, 1.0), 0.0, 0};

    bool operator==(const DetectionRecord&) const = default;
};

/// Loads a detection file: a JSON array of
/// {"bbox": [cx, cy, w, h], "score": s, "category_id": c, "image_id": i}.
/// Note the bbox here is center-size, unlike COCO annotations.
inline std::vector<DetectionRecord> load_detections(const std::string& path) {
    const nlohmann::json root = detail::parse_json_file(path);
    if (!root.is_array()) {
        throw DataError(path + ": expected a JSON array of detections");
    }
    std::vector<DetectionRecord> records;
    std::size_t index = 0;
    for (const auto& node : root) {
        const std::string record = "detection at index " + std::to_string(index);
        DetectionRecord rec;
        rec.image_id = detail::require_field<long long>(node, "image_id", record);
        rec.detection.category = detail::require_field<int>(node, "category_id", record);
        rec.detection.score = detail::require_field<double>(node, "score", record);
        if (!(rec.detection.score >= 0.0) || !(rec.detection.score <= 1.0)) {
            throw DataError(record + ": score must lie in [0, 1]");
        }
        const auto bbox = detail::require_field<std::vector<double>>(node, "bbox", record);
        if (bbox.size() != 4) {
            throw DataError(record + ": bbox must have 4 entries [cx, cy, w, h]");
        }
        try {
            rec.detection.box = BoundingBox(bbox[0], bbox[1], bbox[2], bbox[3]);
        } catch (const InvalidBoxError& e) {
            throw DataError(record + ": " + e.what());
        }
        records.push_back(rec);
        ++index;
    }
    return records;
}

inline void save_detections(const std::string& path,
                            const std::vector<DetectionRecord>& records) {
    nlohmann::json root = nlohmann::json::array();
    for (const auto& rec : records) {
        root.push_back({{"image_id", rec.image_id},
                        {"category_id", rec.detection.category},
                        {"score", rec.detection.score},
                        {"bbox",
                         {rec.detection.box.cx, rec.detection.box.cy, rec.detection.box.w,
                          rec.detection.box.h}}});
    }
    detail::write_text_file(path, root.dump(2) + "\n");
}

} // namespace nwd
