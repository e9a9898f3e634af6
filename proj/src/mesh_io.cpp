#include "brickplan/mesh_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "brickplan/errors.hpp"

namespace brickplan {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

double parse_coord(std::string_view tok, int line_no) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(value)) {
        throw ParseError("bad vertex coordinate '" + std::string(tok) + "'", line_no);
    }
    return value;
}

// A face corner may be "i", "i/t", "i/t/n" or "i//n"; only the vertex index matters here.
long parse_face_index(std::string_view tok, int line_no) {
    std::string_view head = tok.substr(0, tok.find('/'));
    long idx = 0;
    auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), idx);
    if (ec != std::errc{} || ptr != head.data() + head.size()) {
        throw ParseError("bad face index '" + std::string(tok) + "'", line_no);
    }
    if (idx < 0) {
        throw ParseError("negative face index " + std::to_string(idx) + " not supported", line_no);
    }
    if (idx == 0) {
        throw ParseError("face index 0 is invalid (indices are 1-based)", line_no);
    }
    return idx;
}

}  // namespace

TriangleMesh parse_obj(std::string_view text) {
    TriangleMesh mesh;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        auto toks = split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;

        if (toks[0] == "v") {
            if (toks.size() < 4) throw ParseError("vertex record needs 3 coordinates", line_no);
            mesh.vertices.push_back({parse_coord(toks[1], line_no), parse_coord(toks[2], line_no),
                                     parse_coord(toks[3], line_no)});
        } else if (toks[0] == "f") {
            if (toks.size() < 4) throw ParseError("face record needs at least 3 vertices", line_no);
            std::vector<std::uint32_t> corners;
            corners.reserve(toks.size() - 1);
            for (std::size_t i = 1; i < toks.size(); ++i) {
                long idx = parse_face_index(toks[i], line_no);
                if (static_cast<std::size_t>(idx) > mesh.vertices.size()) {
                    throw ParseError("face index " + std::to_string(idx) + " out of range (" +
                                         std::to_string(mesh.vertices.size()) + " vertices so far)",
                                     line_no);
                }
                corners.push_back(static_cast<std::uint32_t>(idx - 1));
            }
            for (std::size_t i = 1; i + 1 < corners.size(); ++i) {
                mesh.triangles.push_back({corners[0], corners[i], corners[i + 1]});
            }
        }
        // vt, vn, o, g, s, usemtl, mtllib and anything else: ignored.
    }

    if (mesh.vertices.empty() || mesh.triangles.empty()) {
        throw ValidationError("mesh has no geometry (need at least one face)");
    }
    return mesh;
}

Aabb bounding_box(const TriangleMesh& mesh) {
    if (mesh.vertices.empty()) throw ValidationError("cannot take bounding box of empty mesh");
    Aabb box{mesh.vertices.front(), mesh.vertices.front()};
    for (const Vec3& v : mesh.vertices) {
        box.min.x = std::min(box.min.x, v.x);
        box.min.y = std::min(box.min.y, v.y);
        box.min.z = std::min(box.min.z, v.z);
        box.max.x = std::max(box.max.x, v.x);
        box.max.y = std::max(box.max.y, v.y);
        box.max.z = std::max(box.max.z, v.z);
    }
    return box;
}

}  // namespace brickplan
