#include "quiverlin/render.hpp"

#include <algorithm>
#include <sstream>

namespace quiverlin {

std::optional<RenderFormat> parse_format(std::string_view name) {
  if (name == "text") return RenderFormat::Text;
  if (name == "svg") return RenderFormat::Svg;
  return std::nullopt;
}

namespace {

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

// Half-cell column of [i,j]: rows are staggered by one half cell.
int half_column(Interval iv) { return 2 * (iv.i - 1) + (iv.length() - 1); }

constexpr int kSvgHalf = 24;
constexpr int kSvgRow = 28;
constexpr int kSvgMargin = 20;

std::string svg_open(int width, int height) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return os.str();
}

}  // namespace

std::string render_grid(int n, const std::vector<std::string>& cells, RenderFormat format,
                        const std::string& title) {
  const auto intervals = all_intervals(n);
  if (cells.size() != intervals.size()) throw std::invalid_argument("one cell per interval expected");

  if (format == RenderFormat::Text) {
    std::size_t width = 1;
    for (const auto& c : cells) width = std::max(width, c.size());
    const std::size_t half = (width + 2) / 2;
    std::vector<std::string> lines(static_cast<std::size_t>(n));
    for (std::size_t p = 0; p < intervals.size(); ++p) {
      auto& line = lines[static_cast<std::size_t>(intervals[p].length() - 1)];
      const std::size_t start = static_cast<std::size_t>(half_column(intervals[p])) * half;
      const std::size_t pad = width - cells[p].size();
      const std::size_t at = start + pad;
      if (line.size() < at) line.resize(at, ' ');
      line.replace(at, cells[p].size(), cells[p]);
    }
    std::string out = title.empty() ? "" : title + "\n";
    for (const auto& line : lines) out += line + "\n";
    return out;
  }

  const int width = 2 * kSvgMargin + kSvgHalf * 2 * (n - 1) + kSvgHalf;
  const int top = kSvgMargin + (title.empty() ? 0 : kSvgRow);
  const int height = top + kSvgRow * n + kSvgMargin;
  std::ostringstream os;
  os << svg_open(width, height);
  if (!title.empty())
    os << "<text x=\"" << kSvgMargin << "\" y=\"" << kSvgMargin + 12
       << "\" font-family=\"monospace\" font-size=\"14\">" << xml_escape(title) << "</text>\n";
  for (std::size_t p = 0; p < intervals.size(); ++p) {
    const int x = kSvgMargin + kSvgHalf / 2 + half_column(intervals[p]) * kSvgHalf;
    const int y = top + (intervals[p].length() - 1) * kSvgRow + kSvgRow / 2;
    os << "<text x=\"" << x << "\" y=\"" << y << "\" text-anchor=\"middle\" dominant-baseline=\"middle\""
       << " font-family=\"monospace\" font-size=\"14\">" << xml_escape(cells[p]) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_triangle(const Triangle& t, RenderFormat format) {
  std::vector<std::string> cells;
  for (auto v : t.values()) cells.push_back(std::to_string(v));
  return render_grid(t.rank(), cells, format);
}

std::string render_slices(const SlicePartition& p, RenderFormat format) {
  std::vector<std::string> cells;
  for (auto iv : all_intervals(p.rank())) cells.push_back(std::to_string(p.slice_of(iv)));
  return render_grid(p.rank(), cells, format);
}

std::string render_component(const SlicePartition& p, const Component& x, std::size_t index,
                             RenderFormat format) {
  std::vector<std::string> cells(static_cast<std::size_t>(num_roots(p.rank())), "o");
  for (int z = 1; z <= p.num_slices(); ++z)
    for (auto iv : slice_restriction(p, x, z).items) cells[triangle_index(iv)] = std::to_string(z);
  std::string title = "Component " + std::to_string(index) + " (" + static_cast<char>(x.direction) + ", edges " +
                      std::to_string(x.first_edge) + ".." + std::to_string(x.last_edge) + ")";
  return render_grid(p.rank(), cells, format, title);
}

std::string render_components(const SlicePartition& p, RenderFormat format) {
  const auto comps = components_of(p.quiver());
  std::string out;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    if (format == RenderFormat::Text && k > 0) out += "\n";
    out += render_component(p, comps[k], k + 1, format);
  }
  return out;
}

std::string render_cone(const ConeSpec& cone, RenderFormat format, const std::string& title) {
  std::vector<std::string> lines;
  for (const auto& r : cone.rows) lines.push_back(r.label + ": " + row_to_string(r.coeffs, cone.coord_labels));
  if (format == RenderFormat::Text) {
    std::string out = title.empty() ? "" : title + "\n";
    for (const auto& l : lines) out += l + "\n";
    return out;
  }
  std::size_t longest = title.size();
  for (const auto& l : lines) longest = std::max(longest, l.size());
  const int width = 2 * kSvgMargin + static_cast<int>(longest) * 9;
  const int count = static_cast<int>(lines.size()) + (title.empty() ? 0 : 1);
  const int height = 2 * kSvgMargin + count * 20;
  std::ostringstream os;
  os << svg_open(width, height);
  int y = kSvgMargin + 14;
  auto emit = [&](const std::string& text) {
    os << "<text x=\"" << kSvgMargin << "\" y=\"" << y << "\" font-family=\"monospace\" font-size=\"14\">"
       << xml_escape(text) << "</text>\n";
    y += 20;
  };
  if (!title.empty()) emit(title);
  for (const auto& l : lines) emit(l);
  os << "</svg>\n";
  return os.str();
}

}  // namespace quiverlin
