#include "forumlens/exports.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "forumlens/io_util.hpp"

namespace forumlens {

namespace {

using ordered_json = nlohmann::ordered_json;

void require_covered(const SocialGraph& g, const MetricTable& m) {
    for (const auto& id : g.nodes()) {
        if (!m.count(id)) throw MetricMismatch("metric table misses node " + id);
    }
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

/// Fraction of nodes with a strictly smaller value; 0 for a single node.
template <typename Value>
std::map<std::string, double> rank_fraction(const std::map<std::string, Value>& values) {
    std::vector<std::pair<Value, std::string>> sorted;
    sorted.reserve(values.size());
    for (const auto& [id, v] : values) sorted.push_back({v, id});
    std::sort(sorted.begin(), sorted.end());
    std::map<std::string, double> out;
    const double denom = std::max<std::size_t>(1, values.size() - 1);
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j].first == sorted[i].first) ++j;
        for (std::size_t k = i; k < j; ++k) {
            out[sorted[k].second] = static_cast<double>(i) / denom;
        }
        i = j;
    }
    return out;
}

ordered_json sorted_array(const std::set<std::string>& s) {
    ordered_json arr = ordered_json::array();
    for (const auto& id : s) arr.push_back(id);
    return arr;
}

}  // namespace

std::string export_graphml(const SocialGraph& g, const MetricTable& m) {
    require_covered(g, m);
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"degree\" for=\"node\" attr.name=\"degree\" attr.type=\"int\"/>\n"
        << "  <key id=\"betweenness\" for=\"node\" attr.name=\"betweenness\" attr.type=\"double\"/>\n"
        << "  <key id=\"coreness\" for=\"node\" attr.name=\"coreness\" attr.type=\"int\"/>\n"
        << "  <key id=\"hub\" for=\"node\" attr.name=\"hub\" attr.type=\"double\"/>\n"
        << "  <key id=\"authority\" for=\"node\" attr.name=\"authority\" attr.type=\"double\"/>\n"
        << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>\n"
        << "  <graph id=\"G\" edgedefault=\"directed\">\n";
    for (const auto& id : g.nodes()) {
        const NodeMetrics& nm = m.at(id);
        out << "    <node id=\"" << xml_escape(id) << "\">\n"
            << "      <data key=\"degree\">" << nm.degree << "</data>\n"
            << "      <data key=\"betweenness\">" << format_double(nm.betweenness)
            << "</data>\n"
            << "      <data key=\"coreness\">" << nm.coreness << "</data>\n"
            << "      <data key=\"hub\">" << format_double(nm.hub) << "</data>\n"
            << "      <data key=\"authority\">" << format_double(nm.authority) << "</data>\n"
            << "    </node>\n";
    }
    for (const auto& [key, w] : g.edges()) {
        out << "    <edge source=\"" << xml_escape(key.first) << "\" target=\""
            << xml_escape(key.second) << "\">\n"
            << "      <data key=\"weight\">" << w << "</data>\n"
            << "    </edge>\n";
    }
    out << "  </graph>\n</graphml>\n";
    return out.str();
}

std::string export_dot(const SocialGraph& g, const MetricTable& m) {
    require_covered(g, m);

    std::map<std::string, int> out_degree;
    std::map<std::string, double> betweenness;
    for (const auto& id : g.nodes()) {
        out_degree[id] = m.at(id).out_degree;
        betweenness[id] = m.at(id).betweenness;
    }
    const auto degree_rank = rank_fraction(out_degree);
    const auto btw_rank = rank_fraction(betweenness);

    std::ostringstream out;
    out << "digraph mooc {\n"
        << "  node [shape=circle, style=filled, colorscheme=greys9, fixedsize=true];\n";
    for (const auto& id : g.nodes()) {
        const double width = 0.3 + 1.2 * degree_rank.at(id);
        const int shade = 1 + static_cast<int>(btw_rank.at(id) * 8.0 + 1e-9);
        out << "  " << dot_quote(id) << " [width=" << format_double(width)
            << ", fillcolor=" << shade << "];\n";
    }
    for (const auto& [key, w] : g.edges()) {
        out << "  " << dot_quote(key.first) << " -> " << dot_quote(key.second)
            << " [weight=" << w << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_metrics_csv(const SocialGraph& g, const MetricTable& m) {
    require_covered(g, m);
    std::string out =
        "node,degree,in_degree,out_degree,betweenness,coreness,hub,authority\n";
    for (const auto& id : g.nodes()) {
        const NodeMetrics& nm = m.at(id);
        out += csv_row({id, std::to_string(nm.degree), std::to_string(nm.in_degree),
                        std::to_string(nm.out_degree), format_double(nm.betweenness),
                        std::to_string(nm.coreness), format_double(nm.hub),
                        format_double(nm.authority)});
    }
    return out;
}

std::string export_bowtie_json(const BowTie& bt) {
    ordered_json doc;
    doc["scc"] = sorted_array(bt.scc);
    doc["in"] = sorted_array(bt.in_set);
    doc["out"] = sorted_array(bt.out_set);
    doc["tubes"] = sorted_array(bt.tubes);
    doc["tendrils"] = sorted_array(bt.tendrils);
    doc["others"] = sorted_array(bt.others);
    return doc.dump(2) + "\n";
}

std::string export_profile_csv(const std::vector<ProfileEntry>& profile) {
    std::string out = "node,betweenness,coreness\n";
    for (const auto& e : profile) {
        out += csv_row({e.node, format_double(e.betweenness), std::to_string(e.coreness)});
    }
    return out;
}

std::string export_features_csv(const std::vector<ThreadFeatures>& features) {
    std::string out =
        "thread_id,thread_length,content_length,duration_hours,thread_density,content_density\n";
    for (const auto& f : features) {
        out += csv_row({f.thread_id, std::to_string(f.thread_length),
                        std::to_string(f.content_length), format_double(f.duration_hours),
                        format_double(f.thread_density), format_double(f.content_density)});
    }
    return out;
}

std::string export_clustering_csv(const Clustering& c,
                                  const std::map<int, std::string>& categories) {
    std::string out = "thread_id,cluster,category\n";
    for (const auto& [tid, cluster] : c.assignments) {
        auto it = categories.find(cluster);
        out += csv_row({tid, std::to_string(cluster),
                        it == categories.end() ? std::string() : it->second});
    }
    return out;
}

std::string export_cohorts_csv(const std::map<std::string, int>& cohorts) {
    std::string out = "author_id,cohort\n";
    for (const auto& [author, week] : cohorts) {
        out += csv_row({author, std::to_string(week)});
    }
    return out;
}

std::string export_unit_week_csv(
    const std::map<std::tuple<int, int, int>, std::int64_t>& matrix) {
    std::string out = "cohort,week,unit,count\n";
    for (const auto& [key, count] : matrix) {
        const auto& [cohort, week, unit] = key;
        out += csv_row({std::to_string(cohort), std::to_string(week), std::to_string(unit),
                        std::to_string(count)});
    }
    return out;
}

std::string export_persistence_csv(
    const std::map<std::pair<int, int>, std::int64_t>& persistence) {
    std::string out = "cohort,unit,count\n";
    for (const auto& [key, count] : persistence) {
        out += csv_row(
            {std::to_string(key.first), std::to_string(key.second), std::to_string(count)});
    }
    return out;
}

std::string export_activity_csv(
    const std::map<std::pair<std::string, int>, std::int64_t>& activity) {
    std::string out = "forum_id,week,count\n";
    for (const auto& [key, count] : activity) {
        out += csv_row({key.first, std::to_string(key.second), std::to_string(count)});
    }
    return out;
}

std::string export_early_posts_csv(const std::vector<EarlyPost>& posts) {
    std::string out = "message_id,unit,lead_seconds\n";
    for (const auto& p : posts) {
        out += csv_row(
            {p.message_id, std::to_string(p.unit), std::to_string(p.lead_seconds)});
    }
    return out;
}

std::string export_roles_csv(const std::map<std::string, RoleLabel>& roles) {
    std::string out = "author_id,label,mpt,dens,inward,mad\n";
    for (const auto& [author, label] : roles) {
        out += csv_row({author, to_string(label.role), format_double(label.mpt),
                        format_double(label.dens), format_double(label.inward),
                        format_double(label.mad)});
    }
    return out;
}

std::string export_tracking_json(const CentralityTracking& t) {
    ordered_json doc;
    doc["remained"] = sorted_array(t.remained);
    doc["dropped"] = sorted_array(t.dropped);
    doc["entered"] = sorted_array(t.entered);
    return doc.dump(2) + "\n";
}

std::string export_transitions_csv(
    const std::map<std::string, std::pair<RoleLabel, RoleLabel>>& transitions) {
    std::string out = "author_id,early_label,late_label\n";
    for (const auto& [author, pair] : transitions) {
        out += csv_row({author, to_string(pair.first.role), to_string(pair.second.role)});
    }
    return out;
}

}  // namespace forumlens
