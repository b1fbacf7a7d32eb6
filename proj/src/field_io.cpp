#include "hjlab/field_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hjlab/error.hpp"

namespace hjlab {

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::filesystem::path sidecar_path(const std::filesystem::path& csv_path) {
  std::filesystem::path p = csv_path;
  p.replace_extension(".json");
  return p;
}

void atomic_write_text(const std::filesystem::path& path, const std::string& text) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::BadSpec, "cannot open " + tmp.string() + " for writing");
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

void write_space_time_field(const std::filesystem::path& csv_path, const SpaceTimeField& f) {
  f.validate();
  std::ostringstream csv;
  csv << (f.grid.dim == 1 ? "t,x,value\n" : "t,x,y,value\n");
  const int n1 = f.grid.dim == 2 ? f.grid.n[1] : 1;
  for (std::size_t k = 0; k < f.times.size(); ++k) {
    for (int i = 0; i < f.grid.n[0]; ++i) {
      for (int j = 0; j < n1; ++j) {
        const Vec x = f.grid.node(i, j);
        csv << fmt17(f.times[k]) << ',' << fmt17(x[0]);
        if (f.grid.dim == 2) csv << ',' << fmt17(x[1]);
        csv << ',' << fmt17(f.slices[k].at(i, j)) << '\n';
      }
    }
  }
  atomic_write_text(csv_path, csv.str());

  nlohmann::json meta;
  meta["dimension"] = f.grid.dim;
  meta["cell"] = f.grid.dim == 1 ? std::vector<double>{f.grid.cell[0]}
                                 : std::vector<double>{f.grid.cell[0], f.grid.cell[1]};
  meta["n"] = f.grid.dim == 1 ? std::vector<int>{f.grid.n[0]}
                              : std::vector<int>{f.grid.n[0], f.grid.n[1]};
  meta["times"] = f.times;
  atomic_write_text(sidecar_path(csv_path), meta.dump(2) + "\n");
}

void write_field(const std::filesystem::path& csv_path, const Field& f) {
  SpaceTimeField st;
  st.grid = f.grid;
  st.times = {0.0};
  st.slices = {f};
  write_space_time_field(csv_path, st);
}

SpaceTimeField read_space_time_field(const std::filesystem::path& csv_path) {
  std::ifstream in(csv_path);
  if (!in) throw Error(ErrorCode::BadSpec, "cannot open " + csv_path.string());

  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::BadSpec, "empty CSV");
  const int dim = line.find(",y,") != std::string::npos ? 2 : 1;
  const int cols = dim + 2;

  std::vector<double> times;
  std::vector<std::vector<double>> values;  // per slice, row-major in file order
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string tok;
    double row[4] = {0, 0, 0, 0};
    int c = 0;
    while (std::getline(ss, tok, ',') && c < cols) row[c++] = std::stod(tok);
    if (c != cols) throw Error(ErrorCode::BadSpec, "malformed CSV row: " + line);
    if (times.empty() || row[0] != times.back()) {
      times.push_back(row[0]);
      values.emplace_back();
    }
    values.back().push_back(row[cols - 1]);
  }
  if (times.empty()) throw Error(ErrorCode::BadSpec, "CSV has no data rows");

  Grid grid;
  const std::filesystem::path meta_path = sidecar_path(csv_path);
  if (std::filesystem::exists(meta_path)) {
    std::ifstream mj(meta_path);
    nlohmann::json meta = nlohmann::json::parse(mj);
    const int d = meta.at("dimension").get<int>();
    const auto cell = meta.at("cell").get<std::vector<double>>();
    const auto n = meta.at("n").get<std::vector<int>>();
    grid = d == 1 ? make_grid(1, cell.at(0), n.at(0)) : make_grid2(cell.at(0), n.at(0), cell.at(1), n.at(1));
  } else if (dim == 1) {
    // infer: nodes start at 0 with uniform spacing
    const std::size_t n = values.front().size();
    std::ifstream again(csv_path);
    std::getline(again, line);
    double x0 = 0, x1 = 0;
    std::getline(again, line);
    std::sscanf(line.c_str(), "%*lf,%lf", &x0);
    std::getline(again, line);
    std::sscanf(line.c_str(), "%*lf,%lf", &x1);
    grid = make_grid(1, (x1 - x0) * static_cast<double>(n), static_cast<int>(n));
  } else {
    throw Error(ErrorCode::BadSpec, "2D CSV requires the JSON sidecar " + meta_path.string());
  }

  SpaceTimeField f;
  f.grid = grid;
  f.times = times;
  f.slices.reserve(times.size());
  for (auto& slab : values) {
    if (slab.size() != grid.size())
      throw Error(ErrorCode::GridMismatch, "slice size does not match grid");
    Field s;
    s.grid = grid;
    s.v = std::move(slab);
    f.slices.push_back(std::move(s));
  }
  f.validate();
  return f;
}

}  // namespace hjlab
