from rankdescent.tools import knn_graph, knn_recall, make_ranking
