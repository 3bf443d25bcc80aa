#include "mcdakit/datagen.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "mcdakit/errors.hpp"
#include "mcdakit/rng.hpp"
#include "mcdakit/util.hpp"

namespace mcdakit {

namespace {

std::string option_id_for(std::size_t index) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "s%06zu", index);
    return buffer;
}

[[noreturn]] void parse_fail(const std::filesystem::path& file, std::size_t line,
                             std::size_t column, const std::string& what) {
    std::ostringstream msg;
    msg << file.string() << ": line " << line;
    if (column != 0) msg << ", column " << column;
    msg << ": " << what;
    throw ParseError(msg.str());
}

} // namespace

const std::vector<AttributeRange>& canonical_attributes() {
    static const std::vector<AttributeRange> attributes = {
        {"battery", Direction::Maximize, 0.0, 100.0, "%"},
        {"price", Direction::Minimize, 1.0, 1000.0, "currency"},
        {"drift", Direction::Minimize, 0.0, 10.0, "%"},
        {"frequency", Direction::Maximize, 0.1, 100.0, "Hz"},
        {"energy_consumption", Direction::Minimize, 1.0, 500.0, "mW"},
        {"response_time", Direction::Minimize, 1.0, 5000.0, "ms"},
    };
    return attributes;
}

DecisionMatrix generate(const GeneratorConfig& config) {
    if (config.n_sensors == 0)
        throw std::invalid_argument("generate: n_sensors must be at least 1");
    if (config.attributes.empty())
        throw std::invalid_argument("generate: attribute list is empty");

    const std::size_t rows = config.n_sensors;
    const std::size_t cols = config.attributes.size();

    std::vector<std::string> names;
    std::vector<Direction> directions;
    names.reserve(cols);
    directions.reserve(cols);
    for (const AttributeRange& attr : config.attributes) {
        names.push_back(attr.name);
        directions.push_back(attr.direction);
    }

    // One stream, consumed in row-major order: cell (i, j) is draw i*N + j.
    Xoshiro256PlusPlus rng(config.seed);
    std::vector<double> values(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            values[i * cols + j] =
                rng.uniform(config.attributes[j].low, config.attributes[j].high);

    std::vector<std::string> ids;
    ids.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) ids.push_back(option_id_for(i));

    return DecisionMatrix(std::move(values), rows,
                          CriteriaSet::equal_weights(std::move(names), std::move(directions)),
                          std::move(ids));
}

DecisionMatrix project_properties(const DecisionMatrix& matrix, std::size_t n_properties) {
    const std::size_t cols = matrix.criterion_count();
    if (n_properties < 2 || n_properties > cols) {
        std::ostringstream msg;
        msg << "project_properties: n_properties must lie in [2, " << cols << "], got "
            << n_properties;
        throw std::out_of_range(msg.str());
    }

    const std::size_t rows = matrix.option_count();
    std::vector<double> values(rows * n_properties);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < n_properties; ++j)
            values[i * n_properties + j] = matrix.at(i, j);

    CriteriaSet criteria;
    criteria.criteria.assign(matrix.criteria().criteria.begin(),
                             matrix.criteria().criteria.begin() +
                                 static_cast<std::ptrdiff_t>(n_properties));
    return DecisionMatrix(std::move(values), rows, std::move(criteria), matrix.option_ids());
}

std::filesystem::path descriptor_path_for(const std::filesystem::path& csv_path) {
    std::filesystem::path p = csv_path;
    p.replace_extension(".json");
    return p;
}

void save_dataset(const DecisionMatrix& matrix, const std::filesystem::path& csv_path) {
    std::ofstream csv(csv_path);
    if (!csv) throw IoError("cannot open for writing: " + csv_path.string());

    csv << "id";
    for (const CriterionSpec& c : matrix.criteria().criteria) csv << ',' << c.name;
    csv << '\n';
    for (std::size_t i = 0; i < matrix.option_count(); ++i) {
        csv << matrix.option_ids()[i];
        for (std::size_t j = 0; j < matrix.criterion_count(); ++j)
            csv << ',' << format_double(matrix.at(i, j));
        csv << '\n';
    }
    csv.flush();
    if (!csv) throw IoError("write failed: " + csv_path.string());

    nlohmann::ordered_json descriptor = nlohmann::ordered_json::array();
    for (const CriterionSpec& c : matrix.criteria().criteria) {
        descriptor.push_back({{"name", c.name},
                              {"direction", to_string(c.direction)},
                              {"weight", c.weight}});
    }
    const std::filesystem::path json_path = descriptor_path_for(csv_path);
    std::ofstream json_out(json_path);
    if (!json_out) throw IoError("cannot open for writing: " + json_path.string());
    json_out << descriptor.dump(2) << '\n';
    json_out.flush();
    if (!json_out) throw IoError("write failed: " + json_path.string());
}

DecisionMatrix load_dataset(const std::filesystem::path& csv_path) {
    std::ifstream csv(csv_path);
    if (!csv) throw IoError("cannot open dataset: " + csv_path.string());

    const std::filesystem::path json_path = descriptor_path_for(csv_path);
    std::ifstream json_in(json_path);
    if (!json_in)
        throw IoError("cannot open dataset descriptor (expected " + json_path.string() + ")");

    nlohmann::json descriptor;
    try {
        descriptor = nlohmann::json::parse(json_in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(json_path.string() + ": " + e.what());
    }
    if (!descriptor.is_array() || descriptor.empty())
        throw ParseError(json_path.string() + ": descriptor must be a non-empty array");

    CriteriaSet criteria;
    for (std::size_t j = 0; j < descriptor.size(); ++j) {
        const auto& entry = descriptor[j];
        std::ostringstream where;
        where << json_path.string() << ": criterion " << j + 1;
        if (!entry.is_object() || !entry.contains("name") || !entry.contains("direction") ||
            !entry.contains("weight"))
            throw ParseError(where.str() + ": expected an object with name/direction/weight");
        if (!entry["name"].is_string() || !entry["direction"].is_string() ||
            !entry["weight"].is_number())
            throw ParseError(where.str() + ": wrong field type");

        CriterionSpec spec;
        spec.name = entry["name"].get<std::string>();
        const std::string dir = entry["direction"].get<std::string>();
        const auto parsed = direction_from_string(dir);
        if (!parsed) throw ParseError(where.str() + ": unknown direction '" + dir + "'");
        spec.direction = *parsed;
        spec.weight = entry["weight"].get<double>();
        criteria.criteria.push_back(std::move(spec));
    }
    const std::size_t cols = criteria.size();

    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&](std::string& out) {
        while (std::getline(csv, out)) {
            ++line_no;
            if (!out.empty() && out.back() == '\r') out.pop_back();
            if (!out.empty()) return true;
        }
        return false;
    };

    if (!next_line(line)) parse_fail(csv_path, 1, 0, "empty file");
    const std::vector<std::string_view> header = split_csv_line(line);
    if (header.empty() || header[0] != "id")
        parse_fail(csv_path, line_no, 1, "header must start with 'id'");
    if (header.size() != cols + 1) {
        std::ostringstream what;
        what << "header has " << header.size() - 1 << " criterion columns, descriptor has "
             << cols;
        parse_fail(csv_path, line_no, 0, what.str());
    }
    for (std::size_t j = 0; j < cols; ++j) {
        if (header[j + 1] != criteria[j].name) {
            std::ostringstream what;
            what << "header column '" << header[j + 1] << "' does not match descriptor criterion '"
                 << criteria[j].name << "'";
            parse_fail(csv_path, line_no, j + 2, what.str());
        }
    }

    std::vector<double> values;
    std::vector<std::string> ids;
    while (next_line(line)) {
        const std::vector<std::string_view> fields = split_csv_line(line);
        if (fields.size() != cols + 1) {
            std::ostringstream what;
            what << "expected " << cols + 1 << " fields, got " << fields.size();
            parse_fail(csv_path, line_no, 0, what.str());
        }
        ids.emplace_back(fields[0]);
        for (std::size_t j = 0; j < cols; ++j) {
            const auto parsed = parse_double(fields[j + 1]);
            if (!parsed)
                parse_fail(csv_path, line_no, j + 2,
                           "not a number: '" + std::string(fields[j + 1]) + "'");
            values.push_back(*parsed);
        }
    }
    if (ids.empty()) parse_fail(csv_path, line_no + 1, 0, "no data rows");

    const std::size_t n_rows = ids.size();
    return DecisionMatrix(std::move(values), n_rows, std::move(criteria), std::move(ids));
}

} // namespace mcdakit
