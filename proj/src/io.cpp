#include "wsqaoa/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wsqaoa {

namespace {

std::vector<std::string> split(const std::string &line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, sep)) {
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == sep) {
        out.emplace_back();
    }
    return out;
}

double parse_double(const std::string &s) {
    double value = 0.0;
    const auto *end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw std::invalid_argument("not a number: '" + s + "'");
    }
    return value;
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc()) {
        throw std::runtime_error("number formatting failed");
    }
    return {buf, ptr};
}

Json graph_to_json(const WeightedGraph &g) {
    Json edges = Json::array();
    for (const auto &e : g.edges()) {
        edges.push_back({e.u, e.v, e.w});
    }
    return {{"n", g.num_vertices()}, {"edges", edges}};
}

WeightedGraph graph_from_json(const Json &j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
        throw std::invalid_argument("graph JSON needs \"n\" and \"edges\"");
    }
    std::vector<Edge> edges;
    for (const auto &row : j.at("edges")) {
        if (!row.is_array() || (row.size() != 2 && row.size() != 3)) {
            throw std::invalid_argument("edge must be [u, v] or [u, v, w]");
        }
        const double w = row.size() == 3 ? row[2].get<double>() : 1.0;
        edges.push_back({row[0].get<int>(), row[1].get<int>(), w});
    }
    return WeightedGraph(j.at("n").get<int>(), std::move(edges));
}

Json embedding_to_json(const SphereEmbedding &x) {
    require_supported_rank(x.rank);
    Json angles = Json::array();
    for (const auto &p : x.points) {
        if (x.rank == 2) {
            angles.push_back({p.theta});
        } else {
            angles.push_back({p.theta, p.phi});
        }
    }
    return {{"rank", x.rank}, {"angles", angles}};
}

SphereEmbedding embedding_from_json(const Json &j) {
    SphereEmbedding x;
    x.rank = j.at("rank").get<int>();
    require_supported_rank(x.rank);
    for (const auto &row : j.at("angles")) {
        const std::size_t want = x.rank == 2 ? 1 : 2;
        if (!row.is_array() || row.size() != want) {
            throw std::invalid_argument("embedding row has the wrong number of angles");
        }
        x.points.push_back({row[0].get<double>(), x.rank == 3 ? row[1].get<double>() : 0.0});
    }
    return x;
}

Json product_state_to_json(const ProductState &s) {
    Json qubits = Json::array();
    for (const auto &q : s.qubits) {
        qubits.push_back({q.theta, q.phi});
    }
    return {{"qubits", qubits}};
}

ProductState product_state_from_json(const Json &j) {
    ProductState s;
    for (const auto &row : j.at("qubits")) {
        if (!row.is_array() || row.size() != 2) {
            throw std::invalid_argument("qubit must be [theta, phi]");
        }
        s.qubits.push_back({row[0].get<double>(), row[1].get<double>()});
    }
    return s;
}

Json trainer_config_to_json(const TrainerConfig &cfg) {
    Json j = {{"step_size", cfg.step_size},
              {"decay1", cfg.decay1},
              {"decay2", cfg.decay2},
              {"epsilon", cfg.epsilon},
              {"grad_spacing", cfg.grad_spacing},
              {"stall_improvement_factor", cfg.stall_improvement_factor},
              {"stall_epochs", cfg.stall_epochs},
              {"init_halfwidth", cfg.init_halfwidth},
              {"max_epochs", cfg.max_epochs},
              {"min_epochs", cfg.min_epochs},
              {"saddle_retry_limit", cfg.saddle_retry_limit},
              {"seed", cfg.seed}};
    if (cfg.init_beta_halfwidth) {
        j["init_beta_halfwidth"] = *cfg.init_beta_halfwidth;
    }
    return j;
}

std::string trace_to_csv(const TrainingTrace &trace) {
    if (trace.epochs.empty()) {
        throw std::invalid_argument("empty training trace");
    }
    const std::size_t p = trace.epochs.front().gamma.size();
    std::ostringstream out;
    out << "epoch";
    for (std::size_t k = 1; k <= p; ++k) {
        out << ",gamma_" << k;
    }
    for (std::size_t k = 1; k <= p; ++k) {
        out << ",beta_" << k;
    }
    out << ",f_value\n";
    for (std::size_t t = 0; t < trace.epochs.size(); ++t) {
        const auto &e = trace.epochs[t];
        out << t;
        for (double g : e.gamma) {
            out << ',' << format_double(g);
        }
        for (double b : e.beta) {
            out << ',' << format_double(b);
        }
        out << ',' << format_double(e.f_value) << '\n';
    }
    return out.str();
}

TrainingTrace trace_from_csv(const std::string &csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("trace CSV has no header");
    }
    const auto header = split(line, ',');
    if (header.size() < 4 || header.front() != "epoch" || header.back() != "f_value" ||
        (header.size() - 2) % 2 != 0) {
        throw std::invalid_argument("malformed trace CSV header");
    }
    const std::size_t p = (header.size() - 2) / 2;
    TrainingTrace trace;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto cells = split(line, ',');
        if (cells.size() != header.size()) {
            throw std::invalid_argument("trace CSV row has the wrong width");
        }
        if (std::stoul(cells[0]) != trace.epochs.size()) {
            throw std::invalid_argument("trace CSV epochs are not consecutive");
        }
        EpochRecord rec;
        for (std::size_t k = 0; k < p; ++k) {
            rec.gamma.push_back(parse_double(cells[1 + k]));
            rec.beta.push_back(parse_double(cells[1 + p + k]));
        }
        rec.f_value = parse_double(cells.back());
        trace.epochs.push_back(std::move(rec));
    }
    if (trace.epochs.empty()) {
        throw std::invalid_argument("trace CSV has no rows");
    }
    return trace;
}

Json trace_sidecar(const TrainingTrace &trace, const TrainerConfig &cfg) {
    return {{"config", trainer_config_to_json(cfg)},
            {"stopped_reason", to_string(trace.stopped_reason)},
            {"retries", trace.retries},
            {"epochs", trace.last_epoch()},
            {"final_value", trace.final_value()}};
}

std::string landscape_to_csv(const Landscape &land) {
    std::ostringstream out;
    out << "beta\\gamma";
    for (double g : land.gamma_grid) {
        out << ',' << format_double(g);
    }
    out << '\n';
    for (std::size_t i = 0; i < land.beta_grid.size(); ++i) {
        out << format_double(land.beta_grid[i]);
        for (double v : land.values[i]) {
            out << ',' << format_double(v);
        }
        out << '\n';
    }
    return out.str();
}

std::string aggregates_to_csv(const std::vector<AggregateCurve> &curves) {
    std::ostringstream out;
    out << "epoch";
    std::size_t horizon = 0;
    for (const auto &c : curves) {
        out << ",r_" << format_double(c.r);
        horizon = std::max(horizon, c.values.size());
    }
    out << '\n';
    for (std::size_t t = 0; t < horizon; ++t) {
        out << t;
        for (const auto &c : curves) {
            out << ',' << format_double(c.values.at(t));
        }
        out << '\n';
    }
    return out.str();
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path &path, const std::string &text) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << text;
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

Json read_json_file(const std::filesystem::path &path) {
    return Json::parse(read_text_file(path));
}

void write_json_file(const std::filesystem::path &path, const Json &j) {
    write_text_file(path, j.dump(2) + "\n");
}

}  // namespace wsqaoa
