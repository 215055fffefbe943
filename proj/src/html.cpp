#include "lpviz/html.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lpviz/errors.hpp"

namespace lpviz {

namespace detail {
std::string_view embedded_ui_bundle();
}

namespace {

std::string escape_text(std::string_view s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error("cannot write " + path.string());
}

std::string node_file(int id) { return "node_" + std::to_string(id) + ".html"; }

}  // namespace

std::string write_html(const SceneDocument& doc, std::string_view bundle, std::string_view title) {
  if (bundle.empty()) throw BundleMissing();
  if (bundle.find("</script") != std::string_view::npos) {
    throw std::invalid_argument("UI bundle must not contain a closing script tag");
  }
  std::ostringstream html;
  html << "<!DOCTYPE html>\n"
       << "<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n"
       << "<title>" << escape_text(title) << "</title>\n"
       << "</head>\n<body>\n<div id=\"lpviz\"></div>\n"
       << "<script type=\"application/json\" id=\"scene-data\">" << serialize_scene(doc) << "</script>\n"
       << "<script>\n" << bundle << "\n</script>\n"
       << "</body>\n</html>\n";
  return html.str();
}

std::string default_ui_bundle() {
  if (const char* path = std::getenv("LPVIZ_UI_BUNDLE"); path != nullptr && *path != '\0') {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw BundleMissing();
    std::ostringstream text;
    text << in.rdbuf();
    if (text.str().empty()) throw BundleMissing();
    return text.str();
  }
  std::string_view embedded = detail::embedded_ui_bundle();
  if (embedded.empty()) throw BundleMissing();
  return std::string(embedded);
}

std::vector<std::filesystem::path> export_bnb_html(const BnbTrace& trace, const SceneOptions& options,
                                                   const std::filesystem::path& dir,
                                                   std::string_view bundle) {
  if (bundle.empty()) throw BundleMissing();
  std::vector<SceneDocument> scenes = build_bnb_scenes(trace, options);
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;

  std::ostringstream index;
  index << "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n"
        << "<title>Branch and bound</title>\n</head>\n<body>\n<h1>Branch and bound</h1>\n<ul>\n";
  for (const auto& scene : scenes) {
    const SceneBnb& meta = *scene.bnb;
    const std::string file = node_file(meta.node);
    std::string title = "Node " + std::to_string(meta.node);
    write_file(dir / file, write_html(scene, bundle, title));
    written.push_back(dir / file);

    index << "<li><a href=\"" << file << "\">" << title << "</a>";
    if (meta.parent) index << " (child of node " << *meta.parent << ")";
    index << ": " << to_string(meta.status);
    if (meta.relaxation_value) index << ", relaxation " << meta.relaxation_value->to_string();
    index << "</li>\n";
  }
  index << "</ul>\n";
  if (trace.optimal) {
    index << "<p>Integer optimum " << trace.optimal->value.to_string() << " at node " << trace.optimal->node
          << ".</p>\n";
  } else {
    index << "<p>No integer solution.</p>\n";
  }
  index << "</body>\n</html>\n";
  write_file(dir / "index.html", index.str());
  written.push_back(dir / "index.html");
  return written;
}

}  // namespace lpviz
