#include "quatmob/json_io.hpp"

#include <cstdio>

namespace quatmob::json {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

double decode_real(const Json& j, const char* what) {
    if (!j.is_number()) {
        fail(std::string(what) + " must be a number");
    }
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
        fail(std::string(what) + " must be finite");
    }
    return v;
}

}  // namespace

Json encode(const Quaternion& q) { return Json::array({q.w, q.x, q.y, q.z}); }

Json encode(const ExtQuaternion& q) { return q.is_infinite() ? Json("inf") : encode(q.finite()); }

Json encode(const Mat2H& m) { return Json::array({encode(m.a), encode(m.b), encode(m.c), encode(m.d)}); }

Json encode(const Generator& g) {
    Json out = Json::object();
    if (const auto* t = std::get_if<Translation>(&g)) {
        out["type"] = "translation";
        out["b"] = encode(t->b);
    } else if (const auto* r = std::get_if<Rotation>(&g)) {
        out["type"] = "rotation";
        out["a"] = encode(r->a);
    } else if (const auto* d = std::get_if<Dilation>(&g)) {
        out["type"] = "dilation";
        out["r"] = d->r;
    } else {
        out["type"] = "inversion";
    }
    return out;
}

Json encode(const QuadricF3& q) {
    Json out = Json::object();
    out["alpha"] = q.alpha;
    out["beta"] = encode(q.beta);
    out["gamma"] = q.gamma;
    return out;
}

Json encode(const MobiusCanonical& g) {
    Json out = Json::object();
    out["alpha"] = encode(g.alpha);
    out["beta"] = encode(g.beta);
    out["q0"] = encode(g.q0);
    return out;
}

Quaternion decode_quaternion(const Json& j) {
    if (!j.is_array() || j.size() != 4) {
        fail("quaternion must be an array of 4 numbers");
    }
    return {decode_real(j[0], "w"), decode_real(j[1], "x"), decode_real(j[2], "y"), decode_real(j[3], "z")};
}

ExtQuaternion decode_ext_quaternion(const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") {
            return ExtQuaternion::infinity();
        }
        fail("the only string accepted for a point is \"inf\"");
    }
    return decode_quaternion(j);
}

Mat2H decode_mat2h(const Json& j) {
    if (!j.is_array() || j.size() != 4) {
        fail("matrix must be an array of 4 quaternions [a, b, c, d]");
    }
    return {decode_quaternion(j[0]), decode_quaternion(j[1]), decode_quaternion(j[2]), decode_quaternion(j[3])};
}

Generator decode_generator(const Json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
        fail("generator must be an object with a string \"type\"");
    }
    const std::string type = j["type"].get<std::string>();
    try {
        if (type == "translation") return Translation{decode_quaternion(j.at("b"))};
        if (type == "rotation") return make_rotation(decode_quaternion(j.at("a")));
        if (type == "dilation") return make_dilation(decode_real(j.at("r"), "r"));
        if (type == "inversion") return Inversion{};
    } catch (const nlohmann::json::exception& e) {
        fail(std::string("generator: ") + e.what());
    } catch (const Error& e) {
        fail(e.what());
    }
    fail("unknown generator type \"" + type + "\"");
}

QuadricF3 decode_quadric(const Json& j) {
    if (!j.is_object() || !j.contains("alpha") || !j.contains("beta") || !j.contains("gamma")) {
        fail("quadric must be an object with alpha, beta, gamma");
    }
    return {decode_real(j["alpha"], "alpha"), decode_quaternion(j["beta"]), decode_real(j["gamma"], "gamma")};
}

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error&) {
        fail("invalid JSON literal: " + text);
    }
}

std::string format_number(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, value);
    double rounded = std::strtod(buf, nullptr);
    if (rounded == 0.0) {
        rounded = 0.0;  // drop the sign of -0
    }
    if (std::abs(rounded) < 1e15 && rounded == std::trunc(rounded)) {
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(rounded));
        return buf;
    }
    std::snprintf(buf, sizeof buf, "%.*g", digits, rounded);
    return buf;
}

Json round_number(double value, int digits) {
    if (!std::isfinite(value)) {
        return Json(value);
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, value);
    double rounded = std::strtod(buf, nullptr);
    if (rounded == 0.0) {
        return Json(0);
    }
    if (std::abs(rounded) < 1e15 && rounded == std::trunc(rounded)) {
        return Json(static_cast<std::int64_t>(rounded));
    }
    return Json(rounded);
}

Json round_all(const Json& doc, int digits) {
    if (doc.is_number_float()) {
        return round_number(doc.get<double>(), digits);
    }
    if (doc.is_array()) {
        Json out = Json::array();
        for (const auto& e : doc) out.push_back(round_all(e, digits));
        return out;
    }
    if (doc.is_object()) {
        Json out = Json::object();
        for (const auto& [key, value] : doc.items()) out[key] = round_all(value, digits);
        return out;
    }
    return doc;
}

}  // namespace quatmob::json
